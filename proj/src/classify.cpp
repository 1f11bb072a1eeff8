#include "frobrel/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "frobrel/constructors.hpp"

namespace frobrel {

namespace {

constexpr int kMaxSearchN = 5;  // table masks are 128 bits, n^3 <= 125

void check_search_size(int n) {
    if (n < 0) throw std::invalid_argument("classify: negative n");
    if (n > kMaxSearchN)
        throw std::runtime_error("classify: n=" + std::to_string(n) +
                                 " exceeds the packed-table limit of " +
                                 std::to_string(kMaxSearchN));
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

SubsetMask apply_perm_subset(SubsetMask s, const std::vector<int>& phi) {
    SubsetMask out = 0;
    for (std::size_t i = 0; i < phi.size(); ++i)
        if ((s >> i) & 1u) out |= SubsetMask{1} << phi[i];
    return out;
}

TableMask apply_perm_table(const TableMask& m, const std::vector<int>& phi, int n) {
    TableMask out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (m.test((x * n + y) * n + z))
                    out.set((phi[x] * n + phi[y]) * n + phi[z]);
    return out;
}

// Unit propagation over the at-least-one clauses: a clause with no possible
// bit is a contradiction, one with a single possible bit forces it in.
bool propagate_clauses(SearchNode& node) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const TableMask& c : node.clauses) {
            if ((c & node.in).any()) continue;
            const TableMask avail = c & node.maybe;
            const std::size_t cnt = avail.count();
            if (cnt == 0) return false;
            if (cnt == 1) {
                node.in |= avail;
                changed = true;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<SubsetMask> enumerate_units(int n) {
    check_search_size(n);
    if (n == 0) return {0};
    std::vector<SubsetMask> out;
    for (int k = 1; k <= n; ++k) out.push_back((SubsetMask{1} << k) - 1);
    return out;
}

std::optional<SearchNode> propagate_unitality(int n, SubsetMask unit) {
    check_search_size(n);
    SearchNode node;
    node.n = n;
    node.unit = unit;
    for (int b = 0; b < n * n * n; ++b) node.maybe.set(b);
    // Both unit laws say mu(x,e) and mu(e,x) sit inside {x} for e in eta.
    for (int e = 0; e < n; ++e) {
        if (!((unit >> e) & 1u)) continue;
        for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z)
                if (z != x) {
                    node.maybe.reset(node.bit_index(x, e, z));
                    node.maybe.reset(node.bit_index(e, x, z));
                }
    }
    // ... and that x is covered on each side by at least one e.
    for (int x = 0; x < n; ++x) {
        TableMask right, left;
        for (int e = 0; e < n; ++e) {
            if (!((unit >> e) & 1u)) continue;
            right.set(node.bit_index(x, e, x));
            left.set(node.bit_index(e, x, x));
        }
        node.clauses.push_back(right);
        node.clauses.push_back(left);
    }
    if (!propagate_clauses(node)) return std::nullopt;
    return node;
}

std::vector<SubsetMask> enumerate_counits(const SearchNode& node) {
    const int n = node.n;
    const int k = std::popcount(node.unit);
    std::vector<std::vector<int>> stabilizer;
    for (const auto& phi : all_permutations(n)) {
        if (apply_perm_subset(node.unit, phi) != node.unit) continue;
        if (apply_perm_table(node.maybe, phi, n) != node.maybe) continue;
        if (apply_perm_table(node.in, phi, n) != node.in) continue;
        stabilizer.push_back(phi);
    }
    std::vector<SubsetMask> out;
    for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
        if (std::popcount(s) != k) continue;
        bool minimal = true;
        for (const auto& phi : stabilizer)
            if (apply_perm_subset(s, phi) < s) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

std::vector<SearchNode> propagate_nondegeneracy(const SearchNode& node, SubsetMask counit) {
    const int n = node.n;
    std::vector<SearchNode> out;
    for (const auto& pattern : all_permutations(n)) {
        SearchNode child = node;
        child.counit = counit;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                TableMask eps_bits;
                for (int w = 0; w < n; ++w)
                    if ((counit >> w) & 1u) eps_bits.set(child.bit_index(x, y, w));
                if (y == pattern[x]) {
                    child.clauses.push_back(eps_bits);  // some counit member appears
                } else {
                    if ((child.in & eps_bits).any()) ok = false;  // already contradicted
                    child.maybe &= ~eps_bits;
                }
            }
        if (!ok) continue;
        if (!propagate_clauses(child)) continue;
        out.push_back(std::move(child));
    }
    return out;
}

namespace {

// Flattened machinery for the inner search: per-cell bit rows (n <= 5 fits
// a byte) and clause literal lists.
struct DfsContext {
    int n = 0;
    int bits = 0;
    SubsetMask unit = 0, counit = 0;
    struct Literal {
        std::uint8_t cell, zmask;
    };
    std::vector<std::vector<Literal>> clauses;
    std::vector<std::vector<std::uint8_t>> affected;  // cell -> triple ids to recheck
    std::vector<FrobData>* out = nullptr;
};

struct DfsState {
    std::array<std::uint8_t, 25> in{};
    std::array<std::uint8_t, 25> maybe{};
};

// Bound check for one associativity triple: the certain part of each side
// must stay inside the possible part of the other.
bool triple_ok(const DfsContext& ctx, const DfsState& st, int t) {
    const int n = ctx.n;
    const int z = t % n, y = (t / n) % n, x = t / (n * n);
    unsigned lhs_low = 0, lhs_high = 0, rhs_low = 0, rhs_high = 0;
    unsigned m = st.in[x * n + y];
    while (m) {
        const int w = std::countr_zero(m);
        lhs_low |= st.in[w * n + z];
        m &= m - 1;
    }
    m = st.maybe[x * n + y];
    while (m) {
        const int w = std::countr_zero(m);
        lhs_high |= st.maybe[w * n + z];
        m &= m - 1;
    }
    m = st.in[y * n + z];
    while (m) {
        const int w = std::countr_zero(m);
        rhs_low |= st.in[x * n + w];
        m &= m - 1;
    }
    m = st.maybe[y * n + z];
    while (m) {
        const int w = std::countr_zero(m);
        rhs_high |= st.maybe[x * n + w];
        m &= m - 1;
    }
    return (lhs_low & ~rhs_high) == 0 && (rhs_low & ~lhs_high) == 0;
}

bool clause_fixpoint(const DfsContext& ctx, DfsState& st, std::vector<int>& changed_cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& clause : ctx.clauses) {
            bool sat = false;
            int avail = 0;
            int force_cell = -1;
            unsigned force_bits = 0;
            for (const auto& lit : clause) {
                if (st.in[lit.cell] & lit.zmask) {
                    sat = true;
                    break;
                }
                const unsigned a = st.maybe[lit.cell] & lit.zmask;
                if (a) {
                    avail += std::popcount(a);
                    force_cell = lit.cell;
                    force_bits = a;
                }
            }
            if (sat) continue;
            if (avail == 0) return false;
            if (avail == 1) {
                st.in[force_cell] |= static_cast<std::uint8_t>(force_bits);
                changed_cells.push_back(force_cell);
                changed = true;
            }
        }
    }
    return true;
}

bool check_affected(const DfsContext& ctx, const DfsState& st, const std::vector<int>& cells) {
    std::bitset<128> seen;
    for (int c : cells)
        for (std::uint8_t t : ctx.affected[c]) {
            if (seen.test(t)) continue;
            seen.set(t);
            if (!triple_ok(ctx, st, t)) return false;
        }
    return true;
}

bool apply_decision(const DfsContext& ctx, DfsState& st, int bit, bool value) {
    const int cell = bit / ctx.n, z = bit % ctx.n;
    std::vector<int> changed_cells{cell};
    if (value)
        st.in[cell] |= static_cast<std::uint8_t>(1u << z);
    else
        st.maybe[cell] &= static_cast<std::uint8_t>(~(1u << z));
    if (!clause_fixpoint(ctx, st, changed_cells)) return false;
    return check_affected(ctx, st, changed_cells);
}

void emit_leaf(const DfsContext& ctx, const DfsState& st) {
    std::vector<std::uint32_t> cells(ctx.n * ctx.n);
    for (int c = 0; c < ctx.n * ctx.n; ++c) cells[c] = st.in[c];
    ctx.out->push_back(make_frob_data(ctx.n, ctx.unit, ctx.counit, cells));
}

void dfs(const DfsContext& ctx, const DfsState& st, int cursor) {
    int bit = -1;
    for (int b = cursor; b < ctx.bits; ++b) {
        const int cell = b / ctx.n, z = b % ctx.n;
        if ((st.maybe[cell] & ~st.in[cell]) & (1u << z)) {
            bit = b;
            break;
        }
    }
    if (bit < 0) {
        emit_leaf(ctx, st);
        return;
    }
    DfsState child = st;
    if (apply_decision(ctx, child, bit, false)) dfs(ctx, child, bit + 1);
    child = st;
    if (apply_decision(ctx, child, bit, true)) dfs(ctx, child, bit + 1);
}

}  // namespace

std::vector<FrobData> search_associativity(const SearchNode& node) {
    const int n = node.n;
    std::vector<FrobData> out;
    if (n == 0) {
        out.push_back(FrobData{FinSet(0)});
        return out;
    }
    DfsContext ctx;
    ctx.n = n;
    ctx.bits = n * n * n;
    ctx.unit = node.unit;
    ctx.counit = node.counit;
    ctx.out = &out;
    for (const TableMask& c : node.clauses) {
        std::vector<DfsContext::Literal> lits;
        for (int cell = 0; cell < n * n; ++cell) {
            std::uint8_t zmask = 0;
            for (int z = 0; z < n; ++z)
                if (c.test(cell * n + z)) zmask |= static_cast<std::uint8_t>(1u << z);
            if (zmask) lits.push_back({static_cast<std::uint8_t>(cell), zmask});
        }
        ctx.clauses.push_back(std::move(lits));
    }
    ctx.affected.resize(n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            auto& list = ctx.affected[p * n + q];
            for (int t = 0; t < ctx.bits; ++t) {
                const int tz = t % n, tx = t / (n * n);
                if (tx == p || tz == q) list.push_back(static_cast<std::uint8_t>(t));
            }
        }

    DfsState st;
    for (int cell = 0; cell < n * n; ++cell) {
        std::uint8_t inm = 0, maybem = 0;
        for (int z = 0; z < n; ++z) {
            if (node.in.test(cell * n + z)) inm |= static_cast<std::uint8_t>(1u << z);
            if (node.maybe.test(cell * n + z)) maybem |= static_cast<std::uint8_t>(1u << z);
        }
        st.in[cell] = inm;
        st.maybe[cell] = maybem;
    }

    std::vector<int> all_cells(n * n);
    std::iota(all_cells.begin(), all_cells.end(), 0);
    if (!clause_fixpoint(ctx, st, all_cells)) return {};
    for (int t = 0; t < ctx.bits; ++t)
        if (!triple_ok(ctx, st, t)) return {};
    dfs(ctx, st, 0);
    return out;
}

namespace {

CanonicalForm encode_with_preimage(const FrobData& d, const std::vector<int>& inv) {
    CanonicalForm f;
    int pos = 0;
    auto push = [&](bool b) {
        if (b) f.words[pos >> 6] |= std::uint64_t{1} << (63 - (pos & 63));
        ++pos;
    };
    const int n = d.n();
    for (int j = 0; j < n; ++j) push(d.unit.get(inv[j]));
    for (int j = 0; j < n; ++j) push(d.counit.get(inv[j]));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) push(d.mu(inv[x], inv[y]).get(inv[z]));
    return f;
}

std::vector<int> invert(const std::vector<int>& phi) {
    std::vector<int> inv(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) inv[phi[i]] = static_cast<int>(i);
    return inv;
}

}  // namespace

CanonicalForm encode(const FrobData& d) {
    std::vector<int> id(d.n());
    std::iota(id.begin(), id.end(), 0);
    return encode_with_preimage(d, id);
}

CanonicalForm canonical_form(const FrobData& d) {
    CanonicalForm best;
    bool have = false;
    for (const auto& phi : all_permutations(d.n())) {
        const CanonicalForm f = encode_with_preimage(d, invert(phi));
        if (!have || f < best) {
            best = f;
            have = true;
        }
    }
    return best;
}

FrobData canonical_representative(const FrobData& d) {
    CanonicalForm best;
    std::vector<int> best_phi;
    bool have = false;
    for (const auto& phi : all_permutations(d.n())) {
        const CanonicalForm f = encode_with_preimage(d, invert(phi));
        if (!have || f < best) {
            best = f;
            best_phi = phi;
            have = true;
        }
    }
    return apply_permutation(d, best_phi);
}

int ClassifyOptions::default_max_n() {
    if (const char* env = std::getenv("FROBREL_MAX_N")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 4;
}

namespace {

struct CatalogEntry {
    CanonicalForm canon;
    std::string desc;
};

// Transitive groupoid pieces available at each morphism count.
std::vector<std::pair<FiniteGroupoid, std::string>> pieces_of_size(int s) {
    std::vector<std::pair<FiniteGroupoid, std::string>> out;
    out.emplace_back(group_as_groupoid(cyclic_group(s)), "Z" + std::to_string(s));
    if (s == 4) {
        out.emplace_back(group_as_groupoid(dihedral_group(2)), "D2");
        out.emplace_back(pair_groupoid(2), "Pair(2)");
    }
    return out;
}

// All disjoint unions of transitive pieces with n morphisms total, as
// (groupoid, name) pairs. Piece sizes descend; equal sizes pick options in
// non-increasing order so each multiset appears once.
std::vector<std::pair<FiniteGroupoid, std::string>> groupoid_zoo(int n) {
    std::vector<std::pair<FiniteGroupoid, std::string>> out;
    std::vector<std::pair<int, int>> chosen;  // (size, option index)
    auto assemble = [&]() {
        auto first_piece = pieces_of_size(chosen[0].first)[chosen[0].second];
        FiniteGroupoid g = std::move(first_piece.first);
        std::string name = std::move(first_piece.second);
        bool all_trivial = chosen[0].first == 1;
        for (std::size_t i = 1; i < chosen.size(); ++i) {
            const auto piece = pieces_of_size(chosen[i].first)[chosen[i].second];
            g = groupoid_disjoint_union(g, piece.first);
            name += "+" + piece.second;
            if (chosen[i].first != 1) all_trivial = false;
        }
        if (all_trivial) name = "trivial(" + std::to_string(chosen.size()) + ")";
        out.emplace_back(std::move(g), std::move(name));
    };
    auto rec = [&](auto&& self, int remaining, int max_size, int max_option) -> void {
        if (remaining == 0) {
            if (!chosen.empty()) assemble();
            return;
        }
        for (int s = std::min(remaining, max_size); s >= 1; --s) {
            const int options = static_cast<int>(pieces_of_size(s).size());
            const int cap = (s == max_size) ? max_option : options - 1;
            for (int o = cap; o >= 0; --o) {
                chosen.emplace_back(s, o);
                self(self, remaining - s, s, o);
                chosen.pop_back();
            }
        }
    };
    rec(rec, n, n, n == 0 ? 0 : static_cast<int>(pieces_of_size(n).size()) - 1);
    return out;
}

std::vector<FiniteGroup> conjugacy_pool() {
    std::vector<FiniteGroup> out;
    for (int m = 1; m <= 8; ++m) out.push_back(cyclic_group(m));
    out.push_back(symmetric_group(3));
    out.push_back(symmetric_group(4));
    for (int m = 2; m <= 6; ++m) out.push_back(dihedral_group(m));
    out.push_back(quaternion_group());
    return out;
}

std::vector<CatalogEntry> build_catalog(int n, const ClassifyOptions& opts) {
    std::vector<CatalogEntry> out;
    if (n == 0) return out;

    std::vector<FiniteGroup> groups;
    groups.push_back(cyclic_group(n));
    if (n == 4) groups.push_back(dihedral_group(2));
    if (n == 6) groups.push_back(symmetric_group(3));
    if (n == 8) {
        groups.push_back(dihedral_group(4));
        groups.push_back(quaternion_group());
    }
    for (const auto& g : groups) {
        std::vector<CanonicalForm> seen;
        for (int omega = 0; omega < g.size; ++omega) {
            const FrobObject obj = group_to_frobenius(g, omega);
            const CanonicalForm cf = canonical_form(obj.data());
            if (std::find(seen.begin(), seen.end(), cf) != seen.end()) continue;
            seen.push_back(cf);
            out.push_back({cf, "group " + g.name + " (omega=" + std::to_string(omega) + ")"});
        }
    }

    for (const auto& [gpd, name] : groupoid_zoo(n)) {
        std::vector<CanonicalForm> seen;
        for (const Section& s : all_sections(gpd)) {
            std::optional<FrobObject> obj;
            try {
                obj = groupoid_to_frobenius(gpd, s);
            } catch (const std::invalid_argument&) {
                continue;  // section breaks nondegeneracy
            }
            const CanonicalForm cf = canonical_form(obj->data());
            if (std::find(seen.begin(), seen.end(), cf) != seen.end()) continue;
            seen.push_back(cf);
            const bool twisted = s.sigma != gpd.identity;
            out.push_back({cf, "groupoid " + name + (twisted ? " (twisted counit)" : "")});
        }
    }

    for (const FiniteGroup& g : conjugacy_pool()) {
        if (static_cast<int>(conjugacy_classes(g).size()) != n) continue;
        const FrobObject obj = conjugacy_classes_to_frobenius(g);
        out.push_back({canonical_form(obj.data()), "conjugacy classes of " + g.name});
    }

    ClassifyOptions sub = opts;
    sub.annotate = false;
    sub.jobs = 1;
    for (int k = 1; 2 * k <= n; ++k) {
        const Census a = classify(k, sub);
        const Census b = (n - k == k) ? a : classify(n - k, sub);
        for (int i = 0; i < a.count(); ++i)
            for (int j = (n - k == k) ? i : 0; j < b.count(); ++j) {
                const FrobObject u =
                    disjoint_union(a.entries[i].object, b.entries[j].object);
                out.push_back({canonical_form(u.data()),
                               "disjoint union: " + std::to_string(k) + "-element case " +
                                   std::to_string(i + 1) + " + " + std::to_string(n - k) +
                                   "-element case " + std::to_string(j + 1)});
            }
    }
    return out;
}

}  // namespace

Census classify(int n, const ClassifyOptions& opts) {
    check_search_size(n);
    if (n > opts.max_n)
        throw std::runtime_error("classify: n=" + std::to_string(n) +
                                 " exceeds the configured bound " + std::to_string(opts.max_n) +
                                 " (raise FROBREL_MAX_N or ClassifyOptions::max_n)");

    std::map<CanonicalForm, FrobData> classes;
    if (n == 0) {
        const FrobData empty{FinSet(0)};
        classes.emplace(canonical_form(empty), empty);
    } else {
        std::vector<SearchNode> items;
        for (SubsetMask unit : enumerate_units(n)) {
            const auto root = propagate_unitality(n, unit);
            if (!root) continue;
            for (SubsetMask counit : enumerate_counits(*root))
                for (SearchNode& child : propagate_nondegeneracy(*root, counit))
                    items.push_back(std::move(child));
        }
        const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(items.size())));
        std::mutex merge_mutex;
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            std::map<CanonicalForm, FrobData> local;
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                for (const FrobData& d : search_associativity(items[i])) {
                    CanonicalForm cf = canonical_form(d);
                    if (local.find(cf) == local.end())
                        local.emplace(std::move(cf), canonical_representative(d));
                }
            }
            const std::lock_guard<std::mutex> lock(merge_mutex);
            for (auto& [cf, d] : local) classes.emplace(cf, std::move(d));
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
    }

    const std::vector<CatalogEntry> catalog =
        opts.annotate ? build_catalog(n, opts) : std::vector<CatalogEntry>{};

    Census census;
    census.n = n;
    for (const auto& [cf, data] : classes) {
        FrobData labeled = data;
        labeled.carrier = letter_carrier(n);
        const VerifyResult v = verify(labeled);
        if (!v.ok()) throw std::logic_error("classify: a survivor failed re-verification");
        CensusEntry entry{*v.object, cf, partition_function(*v.object), {}};
        for (const auto& cat : catalog)
            if (cat.canon == cf &&
                std::find(entry.constructions.begin(), entry.constructions.end(), cat.desc) ==
                    entry.constructions.end())
                entry.constructions.push_back(cat.desc);
        census.entries.push_back(std::move(entry));
    }
    return census;
}

}  // namespace frobrel
