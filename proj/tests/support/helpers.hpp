#pragma once

#include <random>
#include <string>
#include <vector>

#include "frobrel/frobenius.hpp"
#include "frobrel/io.hpp"
#include "support/census_tables.hpp"

#ifndef FROBREL_SOURCE_DIR
#error "FROBREL_SOURCE_DIR must be defined by the build"
#endif

namespace frobrel::testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(FROBREL_SOURCE_DIR) + "/fixtures/" + name;
}

inline FrobData row_data(const TableRow& row) {
    FrobData d = make_frob_data(row.n, row.unit, row.counit, row.cells);
    d.carrier = letter_carrier(row.n);
    return d;
}

inline FrobObject row_object(const TableRow& row) {
    const VerifyResult v = verify(row_data(row));
    if (!v.ok()) throw std::logic_error("table row does not verify: " + row.file);
    return *v.object;
}

// All 30 fixture objects, loaded from the shipped JSON files.
inline const std::vector<FrobObject>& fixture_objects() {
    static const std::vector<FrobObject> objects = [] {
        std::vector<FrobObject> out;
        for (const auto& row : all_rows()) {
            const VerifyResult v = verify(load_frob_data(fixture_path(row.file)));
            if (!v.ok()) throw std::logic_error("fixture does not verify: " + row.file);
            out.push_back(*v.object);
        }
        return out;
    }();
    return objects;
}

inline Relation random_relation(std::mt19937_64& rng, int src, int dst, double density = 0.5) {
    Relation r{FinSet(src), FinSet(dst)};
    std::bernoulli_distribution flip(density);
    for (int x = 0; x < src; ++x)
        for (int y = 0; y < dst; ++y)
            if (flip(rng)) r.add(x, y);
    return r;
}

inline FrobData random_frob_data(std::mt19937_64& rng, int n) {
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> cells(n * n);
    for (auto& c : cells) c = static_cast<std::uint32_t>(rng()) & full;
    return make_frob_data(n, static_cast<std::uint32_t>(rng()) & full,
                          static_cast<std::uint32_t>(rng()) & full, cells);
}

}  // namespace frobrel::testsupport
