#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobrel/frobenius.hpp"
#include "frobrel/tqft.hpp"

namespace frobrel {

using SubsetMask = std::uint32_t;    // subset of carrier elements, bit i = element i
using TableMask = std::bitset<128>;  // membership bits indexed (x*n+y)*n+z, n <= 5

// Three-valued partial multiplication table with unit and counit fixed for
// the branch. A bit is decided out when cleared in maybe, decided in when
// set in in, undecided otherwise; in is always a subset of maybe.
struct SearchNode {
    int n = 0;
    SubsetMask unit = 0;
    SubsetMask counit = 0;  // 0 until a counit branch is chosen
    TableMask maybe;
    TableMask in;
    std::vector<TableMask> clauses;  // at-least-one-of-these-bits constraints

    int bit_index(int x, int y, int z) const { return (x * n + y) * n + z; }
    enum class BitState { Out, In, Undecided };
    BitState state(int x, int y, int z) const {
        const int b = bit_index(x, y, z);
        if (!maybe.test(b)) return BitState::Out;
        return in.test(b) ? BitState::In : BitState::Undecided;
    }
};

// One representative unit per isomorphism class: the prefix subsets of each
// cardinality 1..n. The empty unit cannot satisfy unitality for n >= 1; for
// n = 0 the single empty unit is returned.
std::vector<SubsetMask> enumerate_units(int n);

// Root node for a fixed unit with every bit forced by the two unit laws
// decided, plus the covering constraints as clauses. Returns nullopt on
// contradiction (e.g. an empty unit on a nonempty carrier).
std::optional<SearchNode> propagate_unitality(int n, SubsetMask unit);

// Counit candidates with |eps| = |eta|, reduced modulo relabelings that fix
// the unit and the node's decided bits. Ascending mask order.
std::vector<SubsetMask> enumerate_counits(const SearchNode& node);

// Branches over permutation patterns for the matrix
// M[x][y] = (mu(x,y) meets eps), forcing counit-membership bits under each
// pattern; patterns impossible against already-decided bits are dropped.
std::vector<SearchNode> propagate_nondegeneracy(const SearchNode& node, SubsetMask counit);

// Depth-first completion of the table, deciding bits in row-major order
// (out before in), with clause propagation and incremental associativity
// pruning after every decision. Returns every completed table; each passes
// the full associativity check by construction.
std::vector<FrobData> search_associativity(const SearchNode& node);

// Bit-encoding of (eta, eps, mu) minimized over all n! relabelings.
// Sequence order: eta bits, eps bits, mu bits row-major, packed MSB-first
// so that array comparison is lexicographic comparison of bit sequences.
struct CanonicalForm {
    std::array<std::uint64_t, 4> words{};
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm encode(const FrobData& d);  // under the identity labeling
CanonicalForm canonical_form(const FrobData& d);
FrobData canonical_representative(const FrobData& d);

struct CensusEntry {
    FrobObject object;  // the canonical representative, letter-labeled
    CanonicalForm canon;
    PartitionFunction partition;
    std::vector<std::string> constructions;  // known constructions it matches
};

struct Census {
    int n = 0;
    std::vector<CensusEntry> entries;  // sorted by canonical encoding
    int count() const { return static_cast<int>(entries.size()); }
};

struct ClassifyOptions {
    int jobs = 1;
    int max_n = default_max_n();
    bool annotate = true;

    // 4 unless the FROBREL_MAX_N environment variable says otherwise.
    static int default_max_n();
};

// Full pipeline: unit -> unitality -> counit -> nondegeneracy pattern ->
// associativity search, deduplicated by canonical form, re-verified and
// annotated. Output is deterministic for any job count. Throws
// std::runtime_error when n exceeds the configured bound.
Census classify(int n, const ClassifyOptions& opts = {});

}  // namespace frobrel
