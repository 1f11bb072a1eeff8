#include <set>

#include "doctest.h"
#include "frobrel/constructors.hpp"
#include "support/helpers.hpp"

using namespace frobrel;
namespace ts = frobrel::testsupport;

TEST_CASE("built-in groups validate") {
    CHECK(cyclic_group(5).identity == 0);
    CHECK(symmetric_group(3).size == 6);
    CHECK(symmetric_group(4).size == 24);
    CHECK(dihedral_group(2).size == 4);
    CHECK(quaternion_group().size == 8);
    CHECK(builtin_group("Z6")->name == "Z6");
    CHECK(builtin_group("Q8").has_value());
    CHECK_FALSE(builtin_group("E8").has_value());

    // S3 is not abelian
    const FiniteGroup s3 = symmetric_group(3);
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3.mul(a, b) != s3.mul(b, a)) abelian = false;
    CHECK_FALSE(abelian);

    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}, "bad"),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {1, 1}}, "no-inverse"),
                    std::invalid_argument);
    // an identity may sit anywhere in the table
    CHECK(FiniteGroup::from_cayley({{1, 0}, {0, 1}}, "Z2-shuffled").identity == 1);
}

TEST_CASE("quaternion group relations") {
    const FiniteGroup q8 = quaternion_group();
    const int i = 2, j = 4, k = 6, minus_one = 1;
    CHECK(q8.mul(i, i) == minus_one);
    CHECK(q8.mul(j, j) == minus_one);
    CHECK(q8.mul(i, j) == k);
    CHECK(q8.mul(j, i) == k + 1);  // -k
}

TEST_CASE("groupoid validation rejects broken data") {
    FiniteGroupoid g = trivial_groupoid(2);
    g.compose_table[0][1] = 0;  // composition where s(g) != t(h)
    CHECK_THROWS_WITH_AS(FiniteGroupoid::validated(std::move(g)),
                         doctest::Contains("axiom"), std::invalid_argument);

    FiniteGroupoid h = group_as_groupoid(cyclic_group(3));
    h.inverse[1] = 1;
    CHECK_THROWS_AS(FiniteGroupoid::validated(std::move(h)), std::invalid_argument);
}

TEST_CASE("groupoid objects: two-element table rows") {
    const FiniteGroupoid z2 = group_as_groupoid(cyclic_group(2));
    CHECK(isomorphic(groupoid_to_frobenius(z2), ts::row_object(ts::two_element_rows()[0]))
              .has_value());
    CHECK(isomorphic(groupoid_to_frobenius(z2, Section{{1}}),
                     ts::row_object(ts::two_element_rows()[2]))
              .has_value());
    CHECK(isomorphic(groupoid_to_frobenius(trivial_groupoid(2)),
                     ts::row_object(ts::two_element_rows()[4]))
              .has_value());
    CHECK_THROWS_AS(groupoid_to_frobenius(z2, Section{{0, 1}}), std::invalid_argument);
}

TEST_CASE("trivial groupoid on three objects is the diagonal object") {
    CHECK(isomorphic(groupoid_to_frobenius(trivial_groupoid(3)),
                     ts::row_object(ts::three_element_rows()[24]))
              .has_value());
}

TEST_CASE("group objects: cyclic three-element table rows") {
    const FiniteGroup z3 = cyclic_group(3);
    CHECK(isomorphic(group_to_frobenius(z3, 0), ts::row_object(ts::three_element_rows()[9]))
              .has_value());
    CHECK(isomorphic(group_to_frobenius(z3, 1), ts::row_object(ts::three_element_rows()[16]))
              .has_value());
    CHECK(isomorphic(group_to_frobenius(z3, 2), ts::row_object(ts::three_element_rows()[16]))
              .has_value());

    const FrobObject one = group_to_frobenius(cyclic_group(1), 0);
    CHECK(one.n() == 1);
    CHECK(one.data().mu(0, 0).get(0));
}

TEST_CASE("sections") {
    CHECK(all_sections(group_as_groupoid(cyclic_group(3))).size() == 3);
    CHECK(all_sections(trivial_groupoid(3)).size() == 1);
    CHECK(all_sections(pair_groupoid(2)).size() == 4);
    const FiniteGroupoid p2 = pair_groupoid(2);
    for (const Section& s : all_sections(p2)) CHECK(is_section(p2, s));
}

TEST_CASE("groupoid witness formula holds across the zoo") {
    // groupoid_to_frobenius itself asserts alpha_hat(g) = inv(g).sigma(t(g))
    // whenever the section is accepted; a section is accepted exactly when
    // s.sigma hits every object once (otherwise nondegeneracy fails).
    std::vector<FiniteGroupoid> zoo;
    for (int m = 2; m <= 6; ++m) zoo.push_back(group_as_groupoid(cyclic_group(m)));
    zoo.push_back(group_as_groupoid(symmetric_group(3)));
    for (int k = 1; k <= 4; ++k) zoo.push_back(trivial_groupoid(k));
    for (int k = 2; k <= 4; ++k) zoo.push_back(pair_groupoid(k));
    zoo.push_back(groupoid_disjoint_union(group_as_groupoid(cyclic_group(2)),
                                          trivial_groupoid(2)));
    for (const auto& g : zoo)
        for (const Section& s : all_sections(g)) {
            std::set<int> source_image;
            for (int o = 0; o < g.num_objects; ++o) source_image.insert(g.source[s.sigma[o]]);
            const bool source_bijective =
                static_cast<int>(source_image.size()) == g.num_objects;
            try {
                const FrobObject obj = groupoid_to_frobenius(g, s);
                CHECK(source_bijective);
                CHECK(verify(obj.data()).ok());
            } catch (const std::invalid_argument& e) {
                CHECK_FALSE(source_bijective);
                CHECK(std::string(e.what()).find("nondegeneracy") != std::string::npos);
            }
        }
    // the pair groupoid on two objects admits exactly two valid counits
    int accepted = 0;
    for (const Section& s : all_sections(pair_groupoid(2))) {
        try {
            groupoid_to_frobenius(pair_groupoid(2), s);
            ++accepted;
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(accepted == 2);
}

TEST_CASE("conjugacy classes: structure") {
    const FiniteGroup s3 = symmetric_group(3);
    const auto classes = conjugacy_classes(s3);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<int>{s3.identity});

    std::set<int> sizes;
    for (const auto& c : classes) sizes.insert(static_cast<int>(c.size()));
    CHECK(sizes == std::set<int>{1, 2, 3});
}

TEST_CASE("conjugacy object of S3 is table row three") {
    CHECK(isomorphic(conjugacy_classes_to_frobenius(symmetric_group(3)),
                     ts::row_object(ts::three_element_rows()[2]))
              .has_value());
}

TEST_CASE("conjugacy object of an abelian group is the group object") {
    for (int m = 2; m <= 5; ++m) {
        const FiniteGroup g = cyclic_group(m);
        CHECK(isomorphic(conjugacy_classes_to_frobenius(g), group_to_frobenius(g, 0))
                  .has_value());
    }
}

TEST_CASE("conjugacy object of Q8: five classes, multivalued multiplication") {
    const FiniteGroup q8 = quaternion_group();
    const auto classes = conjugacy_classes(q8);
    REQUIRE(classes.size() == 5);
    const FrobObject obj = conjugacy_classes_to_frobenius(q8);
    CHECK(verify(obj.data()).ok());
    // [i].[i] = {[1],[-1]}
    CHECK(obj.data().mu(2, 2).count() == 2);
    CHECK(obj.commutative());
}

TEST_CASE("conjugacy witness: alpha maps a class to the class of inverses") {
    std::vector<FiniteGroup> pool;
    for (int m = 2; m <= 6; ++m) pool.push_back(cyclic_group(m));
    pool.push_back(symmetric_group(3));
    pool.push_back(symmetric_group(4));
    pool.push_back(dihedral_group(4));
    pool.push_back(quaternion_group());
    for (const auto& g : pool) {
        const auto classes = conjugacy_classes(g);
        std::vector<int> cls(g.size);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int m : classes[c]) cls[m] = static_cast<int>(c);
        const FrobObject obj = conjugacy_classes_to_frobenius(g);
        CHECK(obj.commutative());
        for (std::size_t c = 0; c < classes.size(); ++c)
            CHECK(obj.alpha_hat(static_cast<int>(c)) == cls[g.inverse[classes[c][0]]]);
    }
}
