#include "frobrel/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frobrel {

FrobData::FrobData(FinSet x) : carrier(std::move(x)) {
    unit = Bits(carrier.size);
    counit = Bits(carrier.size);
    mul = PowerMap(FinSet(carrier.size * carrier.size), FinSet(carrier.size));
}

FrobData make_frob_data(int n, std::uint32_t unit_mask, std::uint32_t counit_mask,
                        const std::vector<std::uint32_t>& mul_cells) {
    if (static_cast<int>(mul_cells.size()) != n * n)
        throw std::invalid_argument("make_frob_data: expected n*n multiplication cells");
    FrobData d{FinSet(n)};
    for (int i = 0; i < n; ++i) {
        if ((unit_mask >> i) & 1u) d.unit.set(i);
        if ((counit_mask >> i) & 1u) d.counit.set(i);
    }
    for (int c = 0; c < n * n; ++c)
        for (int z = 0; z < n; ++z)
            if ((mul_cells[c] >> z) & 1u) d.mul.image[c].set(z);
    return d;
}

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Unitality: return "unitality";
        case Axiom::Nondegeneracy: return "nondegeneracy";
        case Axiom::Associativity: return "associativity";
    }
    return "?";
}

UnitalityCheck check_unitality(const FrobData& d) {
    const int n = d.n();
    for (int x = 0; x < n; ++x) {
        Bits right(n), left(n);
        d.unit.for_each([&](int e) {
            right |= d.mu(x, e);
            left |= d.mu(e, x);
        });
        Bits just_x(n);
        just_x.set(x);
        if (!(right == just_x))
            return {false, x, false,
                    "right unit law fails at x=" + d.carrier.label(x)};
        if (!(left == just_x))
            return {false, x, true,
                    "left unit law fails at x=" + d.carrier.label(x)};
    }
    return {true, -1, false, ""};
}

AssociativityCheck check_associativity(const FrobData& d) {
    const int n = d.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Bits lhs(n), rhs(n);
                d.mu(x, y).for_each([&](int w) { lhs |= d.mu(w, z); });
                d.mu(y, z).for_each([&](int w) { rhs |= d.mu(x, w); });
                if (!(lhs == rhs)) return {false, x, y, z};
            }
    return {true, -1, -1, -1};
}

NondegeneracyCheck check_nondegeneracy(const FrobData& d) {
    const int n = d.n();
    std::vector<int> row_partner(n, -1), col_count(n, 0), col_partner(n, -1);
    for (int x = 0; x < n; ++x) {
        int row_count = 0;
        for (int y = 0; y < n; ++y) {
            if (d.mu(x, y).intersects(d.counit)) {
                ++row_count;
                row_partner[x] = y;
                ++col_count[y];
                col_partner[y] = x;
            }
        }
        if (row_count != 1)
            return {false, std::nullopt,
                    "row " + d.carrier.label(x) + " has " + std::to_string(row_count) +
                        " counit partners (need exactly 1)"};
    }
    for (int y = 0; y < n; ++y)
        if (col_count[y] != 1)
            return {false, std::nullopt,
                    "column " + d.carrier.label(y) + " has " + std::to_string(col_count[y]) +
                        " counit partners (need exactly 1)"};
    NondegeneracyWitness w;
    w.alpha_hat = row_partner;
    w.alpha_inv = col_partner;
    return {true, std::move(w), ""};
}

VerifyResult verify(const FrobData& d) {
    VerifyResult result;
    const UnitalityCheck u = check_unitality(d);
    if (!u.ok) result.failures.push_back({Axiom::Unitality, u.detail});
    const NondegeneracyCheck nd = check_nondegeneracy(d);
    if (!nd.ok) result.failures.push_back({Axiom::Nondegeneracy, nd.detail});
    const AssociativityCheck a = check_associativity(d);
    if (!a.ok)
        result.failures.push_back(
            {Axiom::Associativity,
             "sides differ at (" + d.carrier.label(a.x) + "," + d.carrier.label(a.y) + "," +
                 d.carrier.label(a.z) + ")"});
    if (!result.failures.empty()) return result;

    bool comm = true;
    const int n = d.n();
    for (int x = 0; x < n && comm; ++x)
        for (int y = x + 1; y < n && comm; ++y)
            if (!(d.mu(x, y) == d.mu(y, x))) comm = false;
    result.object = FrobObject(d, *nd.witness, comm);
    return result;
}

PowerMap comultiplication(const FrobObject& f) {
    const int n = f.n();
    const FrobData& d = f.data();
    PowerMap delta(FinSet(n), FinSet(n * n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int ay = f.alpha_hat(y);
            d.mu(y, x).for_each([&](int z) { delta.image[x].set(ay * n + z); });
        }
    return delta;
}

Bits copairing(const FrobObject& f) {
    const PowerMap delta = comultiplication(f);
    Bits beta(f.n() * f.n());
    f.data().unit.for_each([&](int e) { beta |= delta.image[e]; });
    return beta;
}

namespace {
const FinSet kPoint{1};

Relation subset_as_row(const Bits& subset) {
    Relation r(kPoint, FinSet(subset.size()));
    subset.for_each([&](int e) { r.add(0, e); });
    return r;
}
}  // namespace

Relation unit_relation(const FrobObject& f) { return subset_as_row(f.data().unit); }

Relation counit_relation(const FrobObject& f) {
    return converse(subset_as_row(f.data().counit));
}

Relation mul_relation(const FrobObject& f) { return from_power_map(f.data().mul); }

Relation comul_relation(const FrobObject& f) { return from_power_map(comultiplication(f)); }

Relation copairing_relation(const FrobObject& f) { return subset_as_row(copairing(f)); }

Relation alpha_relation(const FrobObject& f) {
    const int n = f.n();
    Relation r{FinSet(n), FinSet(n)};
    for (int x = 0; x < n; ++x) r.add(x, f.alpha_hat(x));
    return r;
}

namespace {
bool perm_carries(const FrobData& a, const FrobData& b, const std::vector<int>& phi) {
    const int n = a.n();
    for (int i = 0; i < n; ++i) {
        if (a.unit.get(i) != b.unit.get(phi[i])) return false;
        if (a.counit.get(i) != b.counit.get(phi[i])) return false;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (a.mu(x, y).get(z) != b.mu(phi[x], phi[y]).get(phi[z])) return false;
    return true;
}
}  // namespace

std::optional<std::vector<int>> isomorphic(const FrobObject& f, const FrobObject& g) {
    if (f.n() != g.n()) return std::nullopt;
    std::vector<int> phi(f.n());
    std::iota(phi.begin(), phi.end(), 0);
    do {
        if (perm_carries(f.data(), g.data(), phi)) return phi;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return std::nullopt;
}

FrobData apply_permutation(const FrobData& d, const std::vector<int>& perm) {
    const int n = d.n();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    FrobData out{FinSet(n)};
    for (int i = 0; i < n; ++i) {
        if (d.unit.get(i)) out.unit.set(perm[i]);
        if (d.counit.get(i)) out.counit.set(perm[i]);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            d.mu(x, y).for_each([&](int z) { out.mu(perm[x], perm[y]).set(perm[z]); });
    return out;
}

FrobObject disjoint_union(const FrobObject& f, const FrobObject& g) {
    const int nf = f.n(), ng = g.n();
    FrobData out{FinSet(nf + ng)};
    const FrobData& a = f.data();
    const FrobData& b = g.data();
    a.unit.for_each([&](int e) { out.unit.set(e); });
    b.unit.for_each([&](int e) { out.unit.set(nf + e); });
    a.counit.for_each([&](int e) { out.counit.set(e); });
    b.counit.for_each([&](int e) { out.counit.set(nf + e); });
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y)
            a.mu(x, y).for_each([&](int z) { out.mu(x, y).set(z); });
    for (int x = 0; x < ng; ++x)
        for (int y = 0; y < ng; ++y)
            b.mu(x, y).for_each([&](int z) { out.mu(nf + x, nf + y).set(nf + z); });
    VerifyResult v = verify(out);
    if (!v.ok()) throw std::logic_error("disjoint_union: result failed verification");
    return *v.object;
}

FinSet letter_carrier(int n) {
    if (n > 26) return FinSet(n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return FinSet(n, std::move(labels));
}

}  // namespace frobrel
