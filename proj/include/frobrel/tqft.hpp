#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobrel/frobenius.hpp"

namespace frobrel {

// The handle operator S = mu . delta, stored as the map
// S(x) = union over y of union over z in mu(y,x) of mu(alpha_hat(y), z).
struct HandleOperator {
    PowerMap s_map;  // X -> P(X)
};

HandleOperator handle_operator(const FrobObject& f);

// S^g applied to the unit subset, by g-fold iteration.
Bits genus_state(const FrobObject& f, int genus);

// The surface invariant as an eventually periodic Boolean sequence:
// value(g) tells whether the genus-g surface evaluates to the full relation
// on the one-point set. The period is primitive and the preperiod minimal,
// so the pair is canonical for the sequence.
struct PartitionFunction {
    std::vector<bool> preperiod;
    std::vector<bool> period;  // nonempty
    std::string proposition;
    bool formal_only = false;  // input was not commutative

    bool value_at(long genus) const;
};

// Computes value(g) = (S^g applied to eta meets eps) with cycle detection
// over the visited subset states. For noncommutative objects the sequence is
// still computed but flagged formal_only.
PartitionFunction partition_function(const FrobObject& f);

// Closed form for the cyclic group of order m with counit {omega}:
// true iff (g-1)*omega = 0 mod m. Independent of partition_function, so the
// two can be played against each other.
PartitionFunction partition_function_abelian(int m, int omega);

// Renders a minimized (preperiod, period) pair as a proposition in g.
// Matching is tried in priority order: "True", "False", "g = k", "g >= k"
// (printed with a real >=-sign), "g is odd"/"g is even", "g == r (mod m)"
// (printed with a congruence sign), then an explicit listing.
std::string render_proposition(const std::vector<bool>& preperiod,
                               const std::vector<bool>& period);

// Inverse of render_proposition: recovers the minimized sequence form.
std::optional<std::pair<std::vector<bool>, std::vector<bool>>> parse_proposition(
    const std::string& text);

// Shrinks a (preperiod, period) description to minimal preperiod and
// primitive period without changing the sequence.
std::pair<std::vector<bool>, std::vector<bool>> minimize_sequence(std::vector<bool> preperiod,
                                                                  std::vector<bool> period);

}  // namespace frobrel
