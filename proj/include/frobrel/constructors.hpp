#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobrel/frobenius.hpp"

namespace frobrel {

// A finite group given by an explicit Cayley table. Construction validates
// the group axioms. cayley[g][h] = g*h.
struct FiniteGroup {
    int size = 0;
    std::vector<std::vector<int>> cayley;
    std::string name;
    int identity = 0;
    std::vector<int> inverse;

    static FiniteGroup from_cayley(std::vector<std::vector<int>> table, std::string name);
    int mul(int g, int h) const { return cayley[g][h]; }
};

FiniteGroup cyclic_group(int m);
FiniteGroup symmetric_group(int k);  // k <= 4
FiniteGroup dihedral_group(int m);   // order 2m; m=1 is Z2, m=2 the Klein group
FiniteGroup quaternion_group();
// Names: Z<m>, S<k>, D<m>, Q8.
std::optional<FiniteGroup> builtin_group(const std::string& name);

// A finite groupoid on object set G0 and morphism set G1. Composition
// g.h is defined when s(g) = t(h); the table stores -1 elsewhere.
struct FiniteGroupoid {
    int num_objects = 0;
    int num_morphisms = 0;
    std::vector<int> source, target;             // G1 -> G0
    std::vector<std::vector<int>> compose_table; // -1 marks undefined
    std::vector<int> identity;                   // e: G0 -> G1
    std::vector<int> inverse;                    // G1 -> G1
    std::string name;

    // Validates the groupoid axioms; throws std::invalid_argument naming the
    // violated one.
    static FiniteGroupoid validated(FiniteGroupoid g);
};

FiniteGroupoid group_as_groupoid(const FiniteGroup& g);
FiniteGroupoid trivial_groupoid(int num_objects);
FiniteGroupoid pair_groupoid(int num_objects);
FiniteGroupoid groupoid_disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

// A section of the target map: sigma maps each object o to a morphism with
// t(sigma(o)) = o.
struct Section {
    std::vector<int> sigma;
};

bool is_section(const FiniteGroupoid& g, const Section& s);
// All sections of t, in lexicographic order of sigma.
std::vector<Section> all_sections(const FiniteGroupoid& g);
// The identity section o -> e(o).
Section identity_section(const FiniteGroupoid& g);

// Frobenius object on G1 with eta = e(G0), mu(g,h) = {g.h} when composable,
// and counit sigma(G0) (sigma = e when no twist). The computed witness must
// satisfy alpha_hat(g) = inverse(g) . sigma(t(g)); that is asserted.
FrobObject groupoid_to_frobenius(const FiniteGroupoid& g,
                                 const std::optional<Section>& twist = std::nullopt);

// One-object specialization: carrier G, counit {omega}, alpha_hat(x) =
// inverse(x)*omega.
FrobObject group_to_frobenius(const FiniteGroup& g, int omega);

// Conjugacy classes of g, ordered by least member (identity class first).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// Frobenius object on the conjugacy classes: eta = eps = {[e]},
// mu(C1,C2) = { [g1*g2] : g1 in C1, g2 in C2 }. Asserts at runtime that
// classes are closed under inversion, which nondegeneracy relies on.
FrobObject conjugacy_classes_to_frobenius(const FiniteGroup& g);

}  // namespace frobrel
