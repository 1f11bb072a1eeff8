#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frobrel {

// Dense bitset, sized at construction. Bit i lives in word i/64; unused high
// bits stay zero, so word-wise comparison is set comparison.
class Bits {
public:
    Bits() = default;
    explicit Bits(int size);
    Bits(int size, std::initializer_list<int> elems);

    int size() const { return size_; }
    bool get(int i) const;
    void set(int i, bool value = true);

    bool any() const;
    bool none() const { return !any(); }
    int count() const;
    bool intersects(const Bits& other) const;
    bool is_subset_of(const Bits& other) const;

    Bits& operator|=(const Bits& other);
    Bits& operator&=(const Bits& other);
    friend bool operator==(const Bits& a, const Bits& b) = default;

    // Set elements in increasing order.
    std::vector<int> elements() const;
    // Calls f(i) for each set bit, in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t m = words_[w];
            while (m) {
                const std::uint64_t lsb = m & (~m + 1);
                f(static_cast<int>(w * 64 + __builtin_ctzll(m)));
                m ^= lsb;
            }
        }
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

// A finite set whose elements are canonically the integers 0..size-1.
// Labels are presentation only; they never affect equality of relations.
struct FinSet {
    int size = 0;
    std::vector<std::string> labels;  // empty => defaults "x0","x1",...

    FinSet() = default;
    explicit FinSet(int n);
    FinSet(int n, std::vector<std::string> names);  // validates length/distinctness

    std::string label(int i) const;
};

// Binary relation between finite sets, stored as one bit row per source
// element: row x = { y : (x,y) in R }.
class Relation {
public:
    Relation() = default;
    Relation(FinSet src, FinSet dst);
    static Relation from_pairs(FinSet src, FinSet dst,
                               const std::vector<std::pair<int, int>>& pairs);

    const FinSet& src() const { return src_; }
    const FinSet& dst() const { return dst_; }
    bool contains(int x, int y) const { return rows_[x].get(y); }
    void add(int x, int y);
    const Bits& row(int x) const { return rows_[x]; }
    Bits& row(int x) { return rows_[x]; }

    // All pairs in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const;

    // Equality compares shapes and pair sets; labels are ignored.
    friend bool operator==(const Relation& a, const Relation& b);

private:
    FinSet src_, dst_;
    std::vector<Bits> rows_;
};

// The "generalized map" view of a relation: each source element maps to a
// subset of dst.
struct PowerMap {
    FinSet src, dst;
    std::vector<Bits> image;  // one row per src element

    PowerMap() = default;
    PowerMap(FinSet s, FinSet d);
};

// Composition in diagrammatic order: apply r, then s. Requires
// r.dst.size == s.src.size; mismatch throws std::invalid_argument naming
// both sizes.
Relation compose(const Relation& r, const Relation& s);

// The diagonal relation on x.
Relation identity(const FinSet& x);

// Monoidal product. Product sets are flattened row-major: the pair (i,j) of
// sizes (n1,n2) becomes index i*n2 + j, on both source and target.
Relation product(const Relation& r, const Relation& s);

// { (y,x) : (x,y) in r }, with src/dst swapped.
Relation converse(const Relation& r);

// The braiding on x*x: (i,j) -> (j,i) under the row-major flattening.
Relation swap_relation(const FinSet& x);

PowerMap to_power_map(const Relation& r);
Relation from_power_map(const PowerMap& m);

// Composition through the power-map encoding: (s ∘~ r)(x) = union of s(y)
// over y in r(x). Kept as a separate code path from compose() so the two can
// be checked against each other.
PowerMap compose_power_maps(const PowerMap& r, const PowerMap& s);

}  // namespace frobrel
