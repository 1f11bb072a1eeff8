#include "frobrel/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace frobrel {

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> table, std::string name) {
    FiniteGroup g;
    g.size = static_cast<int>(table.size());
    g.name = std::move(name);
    const int n = g.size;
    if (n == 0) throw std::invalid_argument("group: empty Cayley table");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group: Cayley table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group: table entry out of range");
    g.cayley = std::move(table);

    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (g.cayley[cand][x] != x || g.cayley[x][cand] != x) ok = false;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) throw std::invalid_argument("group: no identity element");
    g.identity = e;

    g.inverse.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (g.cayley[x][y] == e && g.cayley[y][x] == e) {
                g.inverse[x] = y;
                break;
            }
        if (g.inverse[x] < 0)
            throw std::invalid_argument("group: element " + std::to_string(x) + " has no inverse");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (g.cayley[g.cayley[x][y]][z] != g.cayley[x][g.cayley[y][z]])
                    throw std::invalid_argument("group: multiplication not associative");
    return g;
}

FiniteGroup cyclic_group(int m) {
    if (m < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return FiniteGroup::from_cayley(std::move(t), "Z" + std::to_string(m));
}

FiniteGroup symmetric_group(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("symmetric_group: supported for 1 <= k <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    const int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index.at(c);
        }
    return FiniteGroup::from_cayley(std::move(t), "S" + std::to_string(k));
}

FiniteGroup dihedral_group(int m) {
    if (m < 1) throw std::invalid_argument("dihedral_group: parameter must be >= 1");
    // Elements s^f r^i indexed f*m + i, with s r s = r^-1.
    const int n = 2 * m;
    auto idx = [m](int f, int i) { return f * m + ((i % m) + m) % m; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int f = 0; f < 2; ++f)
        for (int i = 0; i < m; ++i)
            for (int g = 0; g < 2; ++g)
                for (int j = 0; j < m; ++j)
                    t[idx(f, i)][idx(g, j)] = idx(f ^ g, (g ? -i : i) + j);
    return FiniteGroup::from_cayley(std::move(t), "D" + std::to_string(m));
}

FiniteGroup quaternion_group() {
    // Index = basis*2 + sign with bases 1,i,j,k; sign 1 means negated.
    static const int bmul[4][4][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int b1 = a / 2, s1 = a % 2, b2 = b / 2, s2 = b % 2;
            const int basis = bmul[b1][b2][0];
            const int sign = s1 ^ s2 ^ bmul[b1][b2][1];
            t[a][b] = basis * 2 + sign;
        }
    return FiniteGroup::from_cayley(std::move(t), "Q8");
}

std::optional<FiniteGroup> builtin_group(const std::string& name) {
    if (name.size() < 2) return std::nullopt;
    const char kind = name[0];
    int arg = 0;
    try {
        arg = std::stoi(name.substr(1));
    } catch (...) {
        return std::nullopt;
    }
    try {
        switch (kind) {
            case 'Z': return cyclic_group(arg);
            case 'S': return symmetric_group(arg);
            case 'D': return dihedral_group(arg);
            case 'Q': return arg == 8 ? std::optional<FiniteGroup>(quaternion_group())
                                      : std::nullopt;
            default: return std::nullopt;
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

namespace {
[[noreturn]] void groupoid_fail(const std::string& what) {
    throw std::invalid_argument("groupoid axiom violated: " + what);
}
}  // namespace

FiniteGroupoid FiniteGroupoid::validated(FiniteGroupoid g) {
    const int n0 = g.num_objects, n1 = g.num_morphisms;
    if (static_cast<int>(g.source.size()) != n1 || static_cast<int>(g.target.size()) != n1)
        groupoid_fail("source/target maps must be total on morphisms");
    for (int m = 0; m < n1; ++m)
        if (g.source[m] < 0 || g.source[m] >= n0 || g.target[m] < 0 || g.target[m] >= n0)
            groupoid_fail("source/target out of range");
    if (static_cast<int>(g.compose_table.size()) != n1)
        groupoid_fail("composition table must have one row per morphism");
    for (const auto& row : g.compose_table)
        if (static_cast<int>(row.size()) != n1)
            groupoid_fail("composition table must be square");
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) {
            const int c = g.compose_table[a][b];
            const bool composable = g.source[a] == g.target[b];
            if (composable != (c >= 0))
                groupoid_fail("composition must be defined exactly when s(g) = t(h)");
            if (c >= n1) groupoid_fail("composition table entry out of range");
            if (c >= 0) {
                // (1) source/target of a composite
                if (g.source[c] != g.source[b] || g.target[c] != g.target[a])
                    groupoid_fail("(1) s(g.h) = s(h) and t(g.h) = t(g)");
            }
        }
    // (2) associativity on composable triples
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b) {
            if (g.source[a] != g.target[b]) continue;
            const int ab = g.compose_table[a][b];
            for (int c = 0; c < n1; ++c) {
                if (g.source[b] != g.target[c]) continue;
                const int bc = g.compose_table[b][c];
                if (g.compose_table[ab][c] != g.compose_table[a][bc])
                    groupoid_fail("(2) composition is associative");
            }
        }
    // (3) identities
    if (static_cast<int>(g.identity.size()) != n0)
        groupoid_fail("(3) identity map must be total on objects");
    for (int o = 0; o < n0; ++o) {
        const int e = g.identity[o];
        if (e < 0 || e >= n1 || g.source[e] != o || g.target[e] != o)
            groupoid_fail("(3) identity map must be a section of both s and t");
    }
    for (int m = 0; m < n1; ++m) {
        if (g.compose_table[m][g.identity[g.source[m]]] != m ||
            g.compose_table[g.identity[g.target[m]]][m] != m)
            groupoid_fail("(3) unit laws g.e(s(g)) = g = e(t(g)).g");
    }
    // (4) inverses
    if (static_cast<int>(g.inverse.size()) != n1)
        groupoid_fail("(4) inverse map must be total on morphisms");
    for (int m = 0; m < n1; ++m) {
        const int i = g.inverse[m];
        if (i < 0 || i >= n1) groupoid_fail("(4) inverse out of range");
        if (g.source[i] != g.target[m] || g.target[i] != g.source[m])
            groupoid_fail("(4) s(inv g) = t(g) and t(inv g) = s(g)");
        if (g.compose_table[m][i] != g.identity[g.target[m]] ||
            g.compose_table[i][m] != g.identity[g.source[m]])
            groupoid_fail("(4) g.inv(g) = e(t(g)) and inv(g).g = e(s(g))");
    }
    return g;
}

FiniteGroupoid group_as_groupoid(const FiniteGroup& g) {
    FiniteGroupoid out;
    out.num_objects = 1;
    out.num_morphisms = g.size;
    out.source.assign(g.size, 0);
    out.target.assign(g.size, 0);
    out.compose_table = g.cayley;
    out.identity = {g.identity};
    out.inverse = g.inverse;
    out.name = g.name;
    return FiniteGroupoid::validated(std::move(out));
}

FiniteGroupoid trivial_groupoid(int num_objects) {
    if (num_objects < 0) throw std::invalid_argument("trivial_groupoid: negative object count");
    FiniteGroupoid out;
    out.num_objects = num_objects;
    out.num_morphisms = num_objects;
    out.source.resize(num_objects);
    out.target.resize(num_objects);
    std::iota(out.source.begin(), out.source.end(), 0);
    out.target = out.source;
    out.compose_table.assign(num_objects, std::vector<int>(num_objects, -1));
    for (int m = 0; m < num_objects; ++m) out.compose_table[m][m] = m;
    out.identity = out.source;
    out.inverse = out.source;
    out.name = "trivial(" + std::to_string(num_objects) + ")";
    return FiniteGroupoid::validated(std::move(out));
}

FiniteGroupoid pair_groupoid(int num_objects) {
    if (num_objects < 1) throw std::invalid_argument("pair_groupoid: need at least one object");
    const int k = num_objects;
    FiniteGroupoid out;
    out.num_objects = k;
    out.num_morphisms = k * k;
    // Morphism i*k+j points from j to i.
    out.source.resize(k * k);
    out.target.resize(k * k);
    out.inverse.resize(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            out.source[i * k + j] = j;
            out.target[i * k + j] = i;
            out.inverse[i * k + j] = j * k + i;
        }
    out.compose_table.assign(k * k, std::vector<int>(k * k, -1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) out.compose_table[i * k + j][j * k + l] = i * k + l;
    out.identity.resize(k);
    for (int o = 0; o < k; ++o) out.identity[o] = o * k + o;
    out.name = "Pair(" + std::to_string(k) + ")";
    return FiniteGroupoid::validated(std::move(out));
}

FiniteGroupoid groupoid_disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    FiniteGroupoid out;
    out.num_objects = a.num_objects + b.num_objects;
    out.num_morphisms = a.num_morphisms + b.num_morphisms;
    const int so = a.num_objects, sm = a.num_morphisms;
    out.source = a.source;
    out.target = a.target;
    for (int m = 0; m < b.num_morphisms; ++m) {
        out.source.push_back(b.source[m] + so);
        out.target.push_back(b.target[m] + so);
    }
    out.compose_table.assign(out.num_morphisms, std::vector<int>(out.num_morphisms, -1));
    for (int x = 0; x < sm; ++x)
        for (int y = 0; y < sm; ++y)
            if (a.compose_table[x][y] >= 0) out.compose_table[x][y] = a.compose_table[x][y];
    for (int x = 0; x < b.num_morphisms; ++x)
        for (int y = 0; y < b.num_morphisms; ++y)
            if (b.compose_table[x][y] >= 0)
                out.compose_table[sm + x][sm + y] = b.compose_table[x][y] + sm;
    out.identity = a.identity;
    for (int o = 0; o < b.num_objects; ++o) out.identity.push_back(b.identity[o] + sm);
    out.inverse = a.inverse;
    for (int m = 0; m < b.num_morphisms; ++m) out.inverse.push_back(b.inverse[m] + sm);
    out.name = a.name + "+" + b.name;
    return FiniteGroupoid::validated(std::move(out));
}

bool is_section(const FiniteGroupoid& g, const Section& s) {
    if (static_cast<int>(s.sigma.size()) != g.num_objects) return false;
    for (int o = 0; o < g.num_objects; ++o) {
        const int m = s.sigma[o];
        if (m < 0 || m >= g.num_morphisms || g.target[m] != o) return false;
    }
    return true;
}

std::vector<Section> all_sections(const FiniteGroupoid& g) {
    std::vector<std::vector<int>> fibers(g.num_objects);
    for (int m = 0; m < g.num_morphisms; ++m) fibers[g.target[m]].push_back(m);
    std::vector<Section> out;
    std::vector<int> pick(g.num_objects, 0);
    while (true) {
        Section s;
        s.sigma.resize(g.num_objects);
        for (int o = 0; o < g.num_objects; ++o) {
            if (fibers[o].empty()) return out;  // no sections at all
            s.sigma[o] = fibers[o][pick[o]];
        }
        out.push_back(std::move(s));
        int o = g.num_objects - 1;
        while (o >= 0 && ++pick[o] == static_cast<int>(fibers[o].size())) pick[o--] = 0;
        if (o < 0) break;
    }
    return out;
}

Section identity_section(const FiniteGroupoid& g) { return Section{g.identity}; }

FrobObject groupoid_to_frobenius(const FiniteGroupoid& g, const std::optional<Section>& twist) {
    const Section sigma = twist.value_or(identity_section(g));
    if (!is_section(g, sigma))
        throw std::invalid_argument("groupoid_to_frobenius: twist is not a section of t");
    const int n = g.num_morphisms;
    FrobData d{FinSet(n)};
    for (int o = 0; o < g.num_objects; ++o) {
        d.unit.set(g.identity[o]);
        d.counit.set(sigma.sigma[o]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.compose_table[a][b] >= 0) d.mu(a, b).set(g.compose_table[a][b]);
    VerifyResult v = verify(d);
    if (!v.ok()) {
        // A section whose composite s.sigma repeats an object gives two rows
        // the same counit partner, so nondegeneracy fails.
        std::string what = "groupoid_to_frobenius: section rejected, violated axiom(s):";
        for (const auto& f : v.failures)
            what += std::string(" ") + axiom_name(f.axiom) + " (" + f.detail + ")";
        throw std::invalid_argument(what);
    }
    for (int m = 0; m < n; ++m) {
        const int predicted = g.compose_table[g.inverse[m]][sigma.sigma[g.target[m]]];
        if (v.object->alpha_hat(m) != predicted)
            throw std::logic_error(
                "groupoid_to_frobenius: witness disagrees with inv(g).sigma(t(g))");
    }
    return *v.object;
}

FrobObject group_to_frobenius(const FiniteGroup& g, int omega) {
    if (omega < 0 || omega >= g.size)
        throw std::invalid_argument("group_to_frobenius: omega out of range");
    return groupoid_to_frobenius(group_as_groupoid(g), Section{{omega}});
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    const int n = g.size;
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    auto collect = [&](int seed) {
        std::vector<int> members;
        for (int h = 0; h < n; ++h) {
            const int conj = g.mul(g.mul(h, seed), g.inverse[h]);
            if (cls[conj] < 0) {
                cls[conj] = static_cast<int>(classes.size());
                members.push_back(conj);
            }
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    };
    collect(g.identity);  // identity class gets index 0
    for (int x = 0; x < n; ++x)
        if (cls[x] < 0) collect(x);
    return classes;
}

FrobObject conjugacy_classes_to_frobenius(const FiniteGroup& g) {
    const auto classes = conjugacy_classes(g);
    const int k = static_cast<int>(classes.size());
    std::vector<int> cls(g.size);
    for (int c = 0; c < k; ++c)
        for (int m : classes[c]) cls[m] = c;

    // Nondegeneracy relies on class inverses forming a class; check it
    // rather than assume it.
    for (int c = 0; c < k; ++c) {
        std::vector<int> inv;
        for (int m : classes[c]) inv.push_back(g.inverse[m]);
        std::sort(inv.begin(), inv.end());
        if (inv != classes[cls[g.inverse[classes[c][0]]]])
            throw std::logic_error(
                "conjugacy_classes_to_frobenius: inverses of a class do not form a class");
    }

    FrobData d{FinSet(k)};
    d.unit.set(0);
    d.counit.set(0);
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = 0; c2 < k; ++c2)
            for (int g1 : classes[c1])
                for (int g2 : classes[c2]) d.mu(c1, c2).set(cls[g.mul(g1, g2)]);
    VerifyResult v = verify(d);
    if (!v.ok())
        throw std::logic_error("conjugacy_classes_to_frobenius: data failed verification");
    return *v.object;
}

}  // namespace frobrel
