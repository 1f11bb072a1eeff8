#include "frobrel/tqft.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace frobrel {

HandleOperator handle_operator(const FrobObject& f) {
    const int n = f.n();
    const FrobData& d = f.data();
    HandleOperator s;
    s.s_map = PowerMap(FinSet(n), FinSet(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int ay = f.alpha_hat(y);
            d.mu(y, x).for_each([&](int z) { s.s_map.image[x] |= d.mu(ay, z); });
        }
    return s;
}

namespace {

std::uint64_t bits_to_mask(const Bits& b) {
    std::uint64_t m = 0;
    b.for_each([&](int i) { m |= std::uint64_t{1} << i; });
    return m;
}

Bits mask_to_bits(std::uint64_t m, int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1u) b.set(i);
    return b;
}

}  // namespace

Bits genus_state(const FrobObject& f, int genus) {
    if (genus < 0) throw std::invalid_argument("genus_state: genus must be >= 0");
    const int n = f.n();
    if (n > 64) throw std::invalid_argument("genus_state: carrier too large (max 64)");
    const HandleOperator s = handle_operator(f);
    std::vector<std::uint64_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = bits_to_mask(s.s_map.image[i]);
    std::uint64_t state = bits_to_mask(f.data().unit);
    for (int g = 0; g < genus; ++g) {
        std::uint64_t next = 0;
        for (int i = 0; i < n; ++i)
            if ((state >> i) & 1u) next |= rows[i];
        state = next;
    }
    return mask_to_bits(state, n);
}

bool PartitionFunction::value_at(long genus) const {
    if (genus < 0) throw std::invalid_argument("PartitionFunction::value_at: genus must be >= 0");
    if (genus < static_cast<long>(preperiod.size())) return preperiod[genus];
    return period[(genus - preperiod.size()) % period.size()];
}

std::pair<std::vector<bool>, std::vector<bool>> minimize_sequence(std::vector<bool> pre,
                                                                  std::vector<bool> per) {
    if (per.empty()) throw std::invalid_argument("minimize_sequence: empty period");
    // primitive period
    const int len = static_cast<int>(per.size());
    for (int d = 1; d <= len; ++d) {
        if (len % d != 0) continue;
        bool fits = true;
        for (int i = d; i < len && fits; ++i)
            if (per[i] != per[i % d]) fits = false;
        if (fits) {
            per.resize(d);
            break;
        }
    }
    // pull the cycle boundary left while the last preperiod value matches
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        const bool last = per.back();
        per.pop_back();
        per.insert(per.begin(), last);
    }
    return {std::move(pre), std::move(per)};
}

PartitionFunction partition_function(const FrobObject& f) {
    const int n = f.n();
    if (n > 64) throw std::invalid_argument("partition_function: carrier too large (max 64)");
    const HandleOperator s = handle_operator(f);
    std::vector<std::uint64_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = bits_to_mask(s.s_map.image[i]);
    const std::uint64_t eps = bits_to_mask(f.data().counit);

    std::map<std::uint64_t, int> first_seen;
    std::vector<bool> values;
    std::uint64_t state = bits_to_mask(f.data().unit);
    int cycle_start = -1;
    while (true) {
        auto [it, fresh] = first_seen.emplace(state, static_cast<int>(values.size()));
        if (!fresh) {
            cycle_start = it->second;
            break;
        }
        values.push_back((state & eps) != 0);
        std::uint64_t next = 0;
        for (int i = 0; i < n; ++i)
            if ((state >> i) & 1u) next |= rows[i];
        state = next;
    }

    PartitionFunction pf;
    std::vector<bool> pre(values.begin(), values.begin() + cycle_start);
    std::vector<bool> per(values.begin() + cycle_start, values.end());
    std::tie(pf.preperiod, pf.period) = minimize_sequence(std::move(pre), std::move(per));
    pf.proposition = render_proposition(pf.preperiod, pf.period);
    pf.formal_only = !f.commutative();
    return pf;
}

PartitionFunction partition_function_abelian(int m, int omega) {
    if (m < 1) throw std::invalid_argument("partition_function_abelian: modulus must be >= 1");
    omega = ((omega % m) + m) % m;
    const int d = omega == 0 ? 1 : m / std::gcd(m, omega);  // order of omega
    PartitionFunction pf;
    if (d == 1) {
        pf.period = {true};
    } else {
        pf.period.assign(d, false);
        pf.period[1] = true;
    }
    pf.proposition = render_proposition(pf.preperiod, pf.period);
    return pf;
}

namespace {

int count_true(const std::vector<bool>& v) {
    int c = 0;
    for (bool b : v) c += b ? 1 : 0;
    return c;
}

std::string bits_string(const std::vector<bool>& v) {
    std::string s;
    for (bool b : v) s += b ? 'T' : 'F';
    return s;
}

std::optional<std::vector<bool>> parse_bits(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::vector<bool> out;
    for (char c : s) {
        if (c == 'T')
            out.push_back(true);
        else if (c == 'F')
            out.push_back(false);
        else
            return std::nullopt;
    }
    return out;
}

std::optional<long> parse_number(const std::string& s) {
    if (s.empty()) return std::nullopt;
    long v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 1'000'000'000L) return std::nullopt;
    }
    return v;
}

constexpr const char* kGeq = "≥";    // >=
constexpr const char* kEquiv = "≡";  // congruence sign

}  // namespace

std::string render_proposition(const std::vector<bool>& preperiod,
                               const std::vector<bool>& period) {
    const auto [pre, per] = minimize_sequence(preperiod, period);
    if (pre.empty() && per.size() == 1) return per[0] ? "True" : "False";
    if (per.size() == 1 && !per[0] && count_true(pre) == 1)
        return "g = " + std::to_string(pre.size() - 1);
    if (per.size() == 1 && per[0] && count_true(pre) == 0)
        return std::string("g ") + kGeq + " " + std::to_string(pre.size());
    if (pre.empty() && per.size() == 2) return per[1] ? "g is odd" : "g is even";
    if (pre.empty() && count_true(per) == 1) {
        int r = 0;
        while (!per[r]) ++r;
        return std::string("g ") + kEquiv + " " + std::to_string(r) + " (mod " +
               std::to_string(per.size()) + ")";
    }
    if (pre.empty()) return "period " + bits_string(per);
    return "preperiod " + bits_string(pre) + ", period " + bits_string(per);
}

std::optional<std::pair<std::vector<bool>, std::vector<bool>>> parse_proposition(
    const std::string& text) {
    using Seq = std::pair<std::vector<bool>, std::vector<bool>>;
    auto done = [](std::vector<bool> pre, std::vector<bool> per) -> std::optional<Seq> {
        return minimize_sequence(std::move(pre), std::move(per));
    };
    if (text == "True") return done({}, {true});
    if (text == "False") return done({}, {false});
    if (text == "g is odd") return done({}, {false, true});
    if (text == "g is even") return done({}, {true, false});

    auto strip_prefix = [](const std::string& s, const std::string& p) -> std::optional<std::string> {
        if (s.rfind(p, 0) == 0) return s.substr(p.size());
        return std::nullopt;
    };
    if (auto rest = strip_prefix(text, "g = ")) {
        if (auto k = parse_number(*rest)) {
            std::vector<bool> pre(*k, false);
            pre.push_back(true);
            return done(std::move(pre), {false});
        }
        return std::nullopt;
    }
    if (auto rest = strip_prefix(text, std::string("g ") + kGeq + " ")) {
        if (auto k = parse_number(*rest)) return done(std::vector<bool>(*k, false), {true});
        return std::nullopt;
    }
    if (auto rest = strip_prefix(text, std::string("g ") + kEquiv + " ")) {
        const auto open = rest->find(" (mod ");
        if (open == std::string::npos || rest->back() != ')') return std::nullopt;
        const auto r = parse_number(rest->substr(0, open));
        const auto m = parse_number(rest->substr(open + 6, rest->size() - open - 7));
        if (!r || !m || *m < 1 || *r >= *m) return std::nullopt;
        std::vector<bool> per(*m, false);
        per[*r] = true;
        return done({}, std::move(per));
    }
    if (auto rest = strip_prefix(text, "period ")) {
        if (auto per = parse_bits(*rest)) return done({}, std::move(*per));
        return std::nullopt;
    }
    if (auto rest = strip_prefix(text, "preperiod ")) {
        const auto comma = rest->find(", period ");
        if (comma == std::string::npos) return std::nullopt;
        auto pre = parse_bits(rest->substr(0, comma));
        auto per = parse_bits(rest->substr(comma + 9));
        if (!pre || !per) return std::nullopt;
        return done(std::move(*pre), std::move(*per));
    }
    return std::nullopt;
}

}  // namespace frobrel
