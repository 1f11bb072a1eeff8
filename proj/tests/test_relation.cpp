#include <random>

#include "doctest.h"
#include "frobrel/io.hpp"
#include "frobrel/relation.hpp"
#include "support/helpers.hpp"

using namespace frobrel;
using frobrel::testsupport::random_relation;

namespace {

// Composition straight off the pair-set definition, kept independent of the
// bit-row implementation so the two can be checked against each other.
Relation compose_pairs_oracle(const Relation& r, const Relation& s) {
    Relation out(r.src(), s.dst());
    for (const auto& [x, y] : r.pairs())
        for (const auto& [y2, z] : s.pairs())
            if (y == y2 && !out.contains(x, z)) out.add(x, z);
    return out;
}

std::vector<Relation> all_relations_2x2() {
    std::vector<Relation> out;
    for (int mask = 0; mask < 16; ++mask) {
        Relation r{FinSet(2), FinSet(2)};
        for (int p = 0; p < 4; ++p)
            if ((mask >> p) & 1) r.add(p / 2, p % 2);
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("compose: definition examples") {
    const Relation r = Relation::from_pairs(FinSet(2), FinSet(2), {{0, 0}, {0, 1}});
    const Relation s = Relation::from_pairs(FinSet(2), FinSet(2), {{1, 0}});
    CHECK(compose(r, s) == Relation::from_pairs(FinSet(2), FinSet(2), {{0, 0}}));
}

TEST_CASE("compose: identity laws") {
    for (const Relation& r : all_relations_2x2()) {
        CHECK(compose(identity(FinSet(2)), r) == r);
        CHECK(compose(r, identity(FinSet(2))) == r);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Relation r = random_relation(rng, 5, 3);
        CHECK(compose(identity(FinSet(5)), r) == r);
        CHECK(compose(r, identity(FinSet(3))) == r);
    }
}

TEST_CASE("compose: associativity, exhaustive on two elements") {
    const auto rels = all_relations_2x2();
    for (const Relation& r : rels)
        for (const Relation& s : rels)
            for (const Relation& t : rels)
                CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
}

TEST_CASE("compose: associativity, random three-element samples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Relation r = random_relation(rng, 3, 3);
        const Relation s = random_relation(rng, 3, 3);
        const Relation t = random_relation(rng, 3, 3);
        CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    }
}

TEST_CASE("compose: power-map route and pair-set route agree") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Relation r = random_relation(rng, 4, 3);
        const Relation s = random_relation(rng, 3, 5);
        const Relation via_bits = compose(r, s);
        const Relation via_pairs = compose_pairs_oracle(r, s);
        const Relation via_power =
            from_power_map(compose_power_maps(to_power_map(r), to_power_map(s)));
        CHECK(via_bits == via_pairs);
        CHECK(via_bits == via_power);
    }
}

TEST_CASE("compose: shape mismatch is rejected with both sizes") {
    const Relation r{FinSet(2), FinSet(3)};
    const Relation s{FinSet(4), FinSet(2)};
    try {
        compose(r, s);
        CHECK_MESSAGE(false, "expected a shape error");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find('3') != std::string::npos);
        CHECK(msg.find('4') != std::string::npos);
    }
}

TEST_CASE("identity") {
    CHECK(identity(FinSet(0)).pairs().empty());
    CHECK(identity(FinSet(2)) ==
          Relation::from_pairs(FinSet(2), FinSet(2), {{0, 0}, {1, 1}}));
    const Relation id3 = identity(FinSet(3));
    CHECK(compose(id3, id3) == id3);
}

TEST_CASE("product: examples and functoriality") {
    CHECK(product(identity(FinSet(2)), identity(FinSet(3))) == identity(FinSet(6)));
    const Relation r = Relation::from_pairs(FinSet(2), FinSet(2), {{0, 1}});
    const Relation s = Relation::from_pairs(FinSet(1), FinSet(1), {{0, 0}});
    CHECK(product(r, s) == Relation::from_pairs(FinSet(2), FinSet(2), {{0, 1}}));
}

TEST_CASE("product: interchange law") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Relation r = random_relation(rng, 2, 2);
        const Relation s = random_relation(rng, 2, 2);
        const Relation p = random_relation(rng, 2, 2);
        const Relation q = random_relation(rng, 2, 2);
        CHECK(product(compose(r, s), compose(p, q)) ==
              compose(product(r, p), product(s, q)));
    }
}

TEST_CASE("converse") {
    CHECK(converse(identity(FinSet(3))) == identity(FinSet(3)));
    CHECK(converse(Relation::from_pairs(FinSet(2), FinSet(2), {{0, 1}})) ==
          Relation::from_pairs(FinSet(2), FinSet(2), {{1, 0}}));
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const Relation r = random_relation(rng, 3, 4);
        const Relation s = random_relation(rng, 4, 2);
        CHECK(converse(converse(r)) == r);
        CHECK(converse(compose(r, s)) == compose(converse(s), converse(r)));
    }
}

TEST_CASE("swap") {
    CHECK(swap_relation(FinSet(1)) == identity(FinSet(1)));
    const Relation sw = swap_relation(FinSet(2));
    CHECK(sw.contains(1, 2));  // (0,1) -> (1,0)
    CHECK(compose(sw, sw) == identity(FinSet(4)));
    const Relation sw3 = swap_relation(FinSet(3));
    CHECK(compose(sw3, sw3) == identity(FinSet(9)));
}

TEST_CASE("power map round trips") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const Relation r = random_relation(rng, 4, 4);
        CHECK(from_power_map(to_power_map(r)) == r);
    }
    const Relation empty{FinSet(3), FinSet(3)};
    for (const Bits& row : to_power_map(empty).image) CHECK(row.none());
}

TEST_CASE("FinSet labels") {
    const FinSet plain(3);
    CHECK(plain.label(0) == "x0");
    const FinSet named(2, {"a", "b"});
    CHECK(named.label(1) == "b");
    CHECK_THROWS_AS(FinSet(2, {"a"}), std::invalid_argument);
    CHECK_THROWS_AS(FinSet(2, {"a", "a"}), std::invalid_argument);
}

TEST_CASE("bounds checking") {
    Relation r{FinSet(2), FinSet(2)};
    CHECK_THROWS_AS(r.add(2, 0), std::out_of_range);
    CHECK_THROWS_AS(r.add(0, -1), std::out_of_range);
}

TEST_CASE("relation JSON: sorted pairs") {
    Relation r{FinSet(3), FinSet(3)};
    r.add(2, 0);
    r.add(0, 2);
    r.add(0, 1);
    const njson j = relation_to_json(r);
    CHECK(j["src"] == 3);
    CHECK(j["pairs"] == njson::parse("[[0,1],[0,2],[2,0]]"));
}

TEST_CASE("empty sets are legal everywhere") {
    const FinSet empty(0);
    const Relation e{empty, empty};
    CHECK(compose(e, e) == e);
    CHECK(product(e, e) == e);
    CHECK(converse(e) == e);
    const Relation into = Relation{FinSet(2), empty};
    CHECK(compose(into, Relation{empty, FinSet(3)}) == Relation(FinSet(2), FinSet(3)));
}
