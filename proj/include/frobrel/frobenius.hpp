#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobrel/relation.hpp"

namespace frobrel {

// Candidate data for a Frobenius object on a finite carrier X: a unit subset,
// a counit subset, and a multiplication map mu: X*X -> P(X) indexed by ordered
// pairs (row-major). Makes no axiom claims.
struct FrobData {
    FinSet carrier;
    Bits unit;      // eta, subset of carrier
    Bits counit;    // eps, subset of carrier
    PowerMap mul;   // rows indexed by x*n+y

    FrobData() = default;
    explicit FrobData(FinSet x);

    int n() const { return carrier.size; }
    const Bits& mu(int x, int y) const { return mul.image[x * carrier.size + y]; }
    Bits& mu(int x, int y) { return mul.image[x * carrier.size + y]; }
};

// Convenience constructor from packed masks: mul_cells[x*n+y] has bit z set
// iff z is in mu(x,y).
FrobData make_frob_data(int n, std::uint32_t unit_mask, std::uint32_t counit_mask,
                        const std::vector<std::uint32_t>& mul_cells);

// The bijection certifying nondegeneracy: alpha_hat(x) is the unique y with
// mu(x,y) meeting the counit.
struct NondegeneracyWitness {
    std::vector<int> alpha_hat;
    std::vector<int> alpha_inv;
};

struct UnitalityCheck {
    bool ok = false;
    int element = -1;       // violating x when !ok
    bool left_side = false; // which unit law failed
    std::string detail;
};

struct AssociativityCheck {
    bool ok = false;
    int x = -1, y = -1, z = -1;  // lexicographically least violating triple
};

struct NondegeneracyCheck {
    bool ok = false;
    std::optional<NondegeneracyWitness> witness;
    std::string detail;  // first row or column with entry count != 1
};

// Right law: union over e in eta of mu(x,e) equals {x}, for every x.
// Left law: same with mu(e,x). Equivalent to the relation equalities
// mu.(1 x eta) = 1 = mu.(eta x 1).
UnitalityCheck check_unitality(const FrobData& d);

// For all x,y,z: union of mu(w,z) over w in mu(x,y) equals union of mu(x,w)
// over w in mu(y,z).
AssociativityCheck check_associativity(const FrobData& d);

// The matrix M[x][y] = (mu(x,y) meets eps) must be a permutation matrix;
// alpha_hat is read off its rows.
NondegeneracyCheck check_nondegeneracy(const FrobData& d);

enum class Axiom { Unitality, Nondegeneracy, Associativity };
const char* axiom_name(Axiom a);

struct AxiomFailure {
    Axiom axiom;
    std::string detail;
};

struct VerifyResult;

// A verified Frobenius object. Only constructible through verify(), so every
// instance satisfies all three axioms.
class FrobObject {
public:
    const FrobData& data() const { return data_; }
    const NondegeneracyWitness& alpha() const { return alpha_; }
    bool commutative() const { return commutative_; }
    int n() const { return data_.carrier.size; }
    int alpha_hat(int x) const { return alpha_.alpha_hat[x]; }

private:
    FrobObject(FrobData d, NondegeneracyWitness w, bool comm)
        : data_(std::move(d)), alpha_(std::move(w)), commutative_(comm) {}
    friend VerifyResult verify(const FrobData& d);

    FrobData data_;
    NondegeneracyWitness alpha_;
    bool commutative_ = false;
};

struct VerifyResult {
    std::optional<FrobObject> object;
    std::vector<AxiomFailure> failures;  // all failing axioms, in check order
    bool ok() const { return object.has_value(); }
};

// Runs unitality, nondegeneracy, associativity (in that order), collecting
// every failure. On success also decides commutativity.
VerifyResult verify(const FrobData& d);

// Comultiplication as a map X -> P(X*X):
// delta(x) = { (alpha_hat(y), z) : y in X, z in mu(y,x) }.
PowerMap comultiplication(const FrobObject& f);

// The copairing beta = delta . eta, as a subset of X*X.
Bits copairing(const FrobObject& f);

// The object's structure morphisms as relations (eta: 1->X, eps: X->1,
// mu: X*X->X, delta: X->X*X, beta: 1->X*X, alpha: X->X).
Relation unit_relation(const FrobObject& f);
Relation counit_relation(const FrobObject& f);
Relation mul_relation(const FrobObject& f);
Relation comul_relation(const FrobObject& f);
Relation copairing_relation(const FrobObject& f);
Relation alpha_relation(const FrobObject& f);

// Searches all n! bijections for one carrying f's structure onto g's.
// Returns a witness permutation (as the image list) if found.
std::optional<std::vector<int>> isomorphic(const FrobObject& f, const FrobObject& g);

// Relabels the data along a permutation: element i becomes perm[i].
FrobData apply_permutation(const FrobData& d, const std::vector<int>& perm);

// Block-form disjoint union: units, counits and multiplications placed
// side by side, cross terms empty. The result is re-verified.
FrobObject disjoint_union(const FrobObject& f, const FrobObject& g);

// Carrier with labels "a","b","c",... (plain defaults beyond 26 elements).
FinSet letter_carrier(int n);

}  // namespace frobrel
