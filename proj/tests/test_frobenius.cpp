#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "frobrel/frobenius.hpp"
#include "support/helpers.hpp"

using namespace frobrel;
namespace ts = frobrel::testsupport;

namespace {

// Brute-force associativity oracle: recompute both sides of every triple
// with plain set loops.
bool assoc_oracle(const FrobData& d) {
    const int n = d.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::set<int> lhs, rhs;
                for (int w = 0; w < n; ++w) {
                    if (d.mu(x, y).get(w))
                        for (int v = 0; v < n; ++v)
                            if (d.mu(w, z).get(v)) lhs.insert(v);
                    if (d.mu(y, z).get(w))
                        for (int v = 0; v < n; ++v)
                            if (d.mu(x, w).get(v)) rhs.insert(v);
                }
                if (lhs != rhs) return false;
            }
    return true;
}

FrobData lettered(FrobData d) {
    d.carrier = letter_carrier(d.n());
    return d;
}

}  // namespace

TEST_CASE("all thirty fixture rows verify and are commutative") {
    const auto& objects = ts::fixture_objects();
    REQUIRE(objects.size() == 30);
    for (const auto& obj : objects) {
        CHECK(obj.commutative());
        CHECK(obj.data().unit.count() == obj.data().counit.count());
    }
}

TEST_CASE("unitality: elementwise checker matches the relation-level laws") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const FrobData d = ts::random_frob_data(rng, 3);
        // relation-level: mu . (1 x eta) == 1 == mu . (eta x 1)
        const Relation mu = from_power_map(d.mul);
        Relation eta{FinSet(1), FinSet(3)};
        d.unit.for_each([&](int e) { eta.add(0, e); });
        const Relation right = compose(product(identity(FinSet(3)), eta), mu);
        const Relation left = compose(product(eta, identity(FinSet(3))), mu);
        const bool relation_level =
            right == identity(FinSet(3)) && left == identity(FinSet(3));
        CHECK(check_unitality(d).ok == relation_level);
    }
}

TEST_CASE("unitality: examples") {
    CHECK(check_unitality(ts::row_data(ts::two_element_rows()[0])).ok);

    // empty unit on a two-element carrier
    FrobData d = make_frob_data(2, 0, 1, {1, 2, 2, 1});
    const UnitalityCheck u = check_unitality(d);
    CHECK_FALSE(u.ok);
    CHECK(u.element == 0);

    // eta = {a}: the forced row/column plus any mu(b,b) stays unital
    for (std::uint32_t bb : {0u, 1u, 2u, 3u})
        CHECK(check_unitality(make_frob_data(2, 1, 1, {1, 2, 2, bb})).ok);
}

TEST_CASE("associativity: examples") {
    CHECK(check_associativity(ts::row_data(ts::three_element_rows()[1])).ok);

    // eta = {a}, eps = {a}, mu(b,b) empty with a nondegeneracy-shaped row b:
    // the first broken triple is (b,b,c)
    const FrobData d = make_frob_data(3, 1, 1, {1, 2, 4, 2, 0, 1, 4, 1, 2});
    const AssociativityCheck a = check_associativity(d);
    CHECK_FALSE(a.ok);
    CHECK(a.x == 1);
    CHECK(a.y == 1);
    CHECK(a.z == 2);
}

TEST_CASE("associativity: brute-force oracle agreement") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        const FrobData d = ts::random_frob_data(rng, 3);
        CHECK(check_associativity(d).ok == assoc_oracle(d));
    }
}

TEST_CASE("nondegeneracy: witnesses and failures") {
    // table 1 case 4: alpha is the transposition
    const NondegeneracyCheck c4 = check_nondegeneracy(ts::row_data(ts::two_element_rows()[3]));
    REQUIRE(c4.ok);
    CHECK(c4.witness->alpha_hat == std::vector<int>{1, 0});
    CHECK(c4.witness->alpha_inv == std::vector<int>{1, 0});

    // Z2 group object with eps = {a}: alpha is the identity
    const NondegeneracyCheck c1 = check_nondegeneracy(ts::row_data(ts::two_element_rows()[0]));
    REQUIRE(c1.ok);
    CHECK(c1.witness->alpha_hat == std::vector<int>{0, 1});

    // mu(b,b) = {b} with eps = {a}: row b finds no counit partner
    const NondegeneracyCheck bad = check_nondegeneracy(lettered(make_frob_data(2, 1, 1, {1, 2, 2, 2})));
    CHECK_FALSE(bad.ok);
    CHECK(bad.detail.find("row b") != std::string::npos);
    CHECK(bad.detail.find('0') != std::string::npos);
}

TEST_CASE("comultiplication: examples") {
    // table 1 case 4: delta(a) = {(b,a),(a,b)}, delta(b) = {(b,b)}
    const FrobObject c4 = ts::row_object(ts::two_element_rows()[3]);
    const PowerMap delta = comultiplication(c4);
    CHECK(delta.image[0].elements() == std::vector<int>{1, 2});
    CHECK(delta.image[1].elements() == std::vector<int>{3});

    // one-element object
    const FrobObject one = ts::row_object(ts::TableRow{1, 1, 1, {1}, "True", ""});
    CHECK(comultiplication(one).image[0].elements() == std::vector<int>{0});
}

TEST_CASE("comultiplication: counital and coassociative for every fixture") {
    for (const auto& obj : ts::fixture_objects()) {
        const int n = obj.n();
        const Relation delta = comul_relation(obj);
        const Relation eps = counit_relation(obj);
        const Relation id = identity(FinSet(n));
        CHECK(compose(delta, product(eps, id)) == id);
        CHECK(compose(delta, product(id, eps)) == id);
        CHECK(compose(delta, product(delta, id)) == compose(delta, product(id, delta)));
    }
}

TEST_CASE("copairing: examples and snake equations") {
    // table 1 case 3: beta = {(a,b),(b,a)}
    const FrobObject c3 = ts::row_object(ts::two_element_rows()[2]);
    CHECK(copairing(c3).elements() == std::vector<int>{1, 2});

    const FrobObject one = ts::row_object(ts::TableRow{1, 1, 1, {1}, "True", ""});
    CHECK(copairing(one).elements() == std::vector<int>{0});

    for (const auto& obj : ts::fixture_objects()) {
        const int n = obj.n();
        const Relation id = identity(FinSet(n));
        const Relation beta = copairing_relation(obj);
        const Relation mu = mul_relation(obj);
        const Relation eps = counit_relation(obj);
        // (eps x 1).(mu x 1).(1 x beta) == 1 == (1 x eps).(1 x mu).(beta x 1)
        const Relation left =
            compose(compose(product(id, beta), product(mu, id)), product(eps, id));
        const Relation right =
            compose(compose(product(beta, id), product(id, mu)), product(id, eps));
        CHECK(left == id);
        CHECK(right == id);
    }
}

TEST_CASE("frobenius condition as relation equalities") {
    for (const auto& obj : ts::fixture_objects()) {
        const Relation id = identity(FinSet(obj.n()));
        const Relation mu = mul_relation(obj);
        const Relation delta = comul_relation(obj);
        const Relation middle = compose(mu, delta);
        CHECK(compose(product(delta, id), product(id, mu)) == middle);
        CHECK(compose(product(id, delta), product(mu, id)) == middle);
    }
}

TEST_CASE("verify: every single-bit corruption of the cyclic three-element object fails") {
    const ts::TableRow z3 = ts::three_element_rows()[9];  // case 10
    for (int bit = 0; bit < 27; ++bit) {
        auto cells = z3.cells;
        cells[bit / 3] ^= 1u << (bit % 3);
        const VerifyResult v = verify(make_frob_data(3, z3.unit, z3.counit, cells));
        CHECK_FALSE(v.ok());
        CHECK_FALSE(v.failures.empty());
    }
}

TEST_CASE("verify: reports all failing axioms") {
    // empty unit, empty counit, empty mul on two elements: everything fails
    const VerifyResult v = verify(make_frob_data(2, 0, 0, {0, 0, 0, 0}));
    REQUIRE(v.failures.size() == 2);  // unitality + nondegeneracy; associativity holds vacuously
    CHECK(v.failures[0].axiom == Axiom::Unitality);
    CHECK(v.failures[1].axiom == Axiom::Nondegeneracy);
}

TEST_CASE("isomorphic: examples") {
    const FrobObject c1 = ts::row_object(ts::two_element_rows()[0]);
    const FrobObject c3 = ts::row_object(ts::two_element_rows()[2]);
    CHECK_FALSE(isomorphic(c1, c3).has_value());
    CHECK(isomorphic(c1, c1) == std::vector<int>{0, 1});

    // exchanging b and c in a three-element object is undone by the transposition
    const FrobObject n3c1 = ts::row_object(ts::three_element_rows()[0]);
    const std::vector<int> swap_bc{0, 2, 1};
    const VerifyResult swapped = verify(apply_permutation(n3c1.data(), swap_bc));
    REQUIRE(swapped.ok());
    CHECK(isomorphic(n3c1, *swapped.object) == swap_bc);

    // case 5 is invariant under the exchange, so the transposition is an automorphism
    const FrobObject n3c5 = ts::row_object(ts::three_element_rows()[4]);
    CHECK(apply_permutation(n3c5.data(), swap_bc).mul.image == n3c5.data().mul.image);
}

TEST_CASE("isomorphic: equivalence relation on the three-element census") {
    std::vector<FrobObject> objs;
    for (const auto& row : ts::three_element_rows()) objs.push_back(ts::row_object(row));
    std::mt19937_64 rng(41);
    for (std::size_t i = 0; i < objs.size(); ++i) {
        CHECK(isomorphic(objs[i], objs[i]).has_value());  // reflexive
        for (std::size_t j = i + 1; j < objs.size(); ++j) {
            const bool ij = isomorphic(objs[i], objs[j]).has_value();
            const bool ji = isomorphic(objs[j], objs[i]).has_value();
            CHECK(ij == ji);   // symmetric
            CHECK_FALSE(ij);   // table rows are pairwise non-isomorphic
        }
    }
    // transitivity through chains of relabelings
    for (const auto& obj : objs) {
        std::vector<int> phi{1, 2, 0}, psi{2, 0, 1};
        std::shuffle(phi.begin(), phi.end(), rng);
        const FrobObject a = *verify(apply_permutation(obj.data(), phi)).object;
        const FrobObject b = *verify(apply_permutation(a.data(), psi)).object;
        CHECK(isomorphic(obj, a).has_value());
        CHECK(isomorphic(a, b).has_value());
        CHECK(isomorphic(obj, b).has_value());
    }
}

TEST_CASE("disjoint union") {
    const FrobObject trivial = ts::row_object(ts::TableRow{1, 1, 1, {1}, "True", ""});
    const auto& two = ts::two_element_rows();
    const auto& three = ts::three_element_rows();

    CHECK(isomorphic(disjoint_union(trivial, ts::row_object(two[0])),
                     ts::row_object(three[20]))
              .has_value());  // case 21
    CHECK(isomorphic(disjoint_union(trivial, ts::row_object(two[3])),
                     ts::row_object(three[23]))
              .has_value());  // case 24

    // empty object is the unit of disjoint union
    const FrobObject empty = *verify(FrobData{FinSet(0)}).object;
    for (const auto& row : two) {
        const FrobObject f = ts::row_object(row);
        const FrobObject u = disjoint_union(empty, f);
        CHECK(u.data().unit == f.data().unit);
        CHECK(u.data().counit == f.data().counit);
        CHECK(u.data().mul.image == f.data().mul.image);
    }
}
