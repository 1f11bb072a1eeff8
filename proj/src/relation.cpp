#include "frobrel/relation.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace frobrel {

Bits::Bits(int size) : size_(size), words_((size + 63) / 64, 0) {
    if (size < 0) throw std::invalid_argument("Bits: negative size");
}

Bits::Bits(int size, std::initializer_list<int> elems) : Bits(size) {
    for (int e : elems) set(e);
}

bool Bits::get(int i) const {
    if (i < 0 || i >= size_) throw std::out_of_range("Bits::get: index out of range");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void Bits::set(int i, bool value) {
    if (i < 0 || i >= size_) throw std::out_of_range("Bits::set: index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

bool Bits::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

int Bits::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool Bits::intersects(const Bits& other) const {
    if (size_ != other.size_) throw std::invalid_argument("Bits::intersects: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool Bits::is_subset_of(const Bits& other) const {
    if (size_ != other.size_) throw std::invalid_argument("Bits::is_subset_of: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

Bits& Bits::operator|=(const Bits& other) {
    if (size_ != other.size_) throw std::invalid_argument("Bits::operator|=: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bits& Bits::operator&=(const Bits& other) {
    if (size_ != other.size_) throw std::invalid_argument("Bits::operator&=: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::vector<int> Bits::elements() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
}

FinSet::FinSet(int n) : size(n) {
    if (n < 0) throw std::invalid_argument("FinSet: negative size");
}

FinSet::FinSet(int n, std::vector<std::string> names) : size(n), labels(std::move(names)) {
    if (n < 0) throw std::invalid_argument("FinSet: negative size");
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("FinSet: labels length != size");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n)
            throw std::invalid_argument("FinSet: labels not distinct");
    }
}

std::string FinSet::label(int i) const {
    if (i < 0 || i >= size) throw std::out_of_range("FinSet::label: index out of range");
    if (!labels.empty()) return labels[i];
    return "x" + std::to_string(i);
}

Relation::Relation(FinSet src, FinSet dst) : src_(std::move(src)), dst_(std::move(dst)) {
    rows_.assign(src_.size, Bits(dst_.size));
}

Relation Relation::from_pairs(FinSet src, FinSet dst,
                              const std::vector<std::pair<int, int>>& pairs) {
    Relation r(std::move(src), std::move(dst));
    for (const auto& [x, y] : pairs) r.add(x, y);
    return r;
}

void Relation::add(int x, int y) {
    if (x < 0 || x >= src_.size || y < 0 || y >= dst_.size)
        throw std::out_of_range("Relation::add: pair out of bounds");
    rows_[x].set(y);
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < src_.size; ++x)
        rows_[x].for_each([&](int y) { out.emplace_back(x, y); });
    return out;
}

bool operator==(const Relation& a, const Relation& b) {
    return a.src_.size == b.src_.size && a.dst_.size == b.dst_.size && a.rows_ == b.rows_;
}

PowerMap::PowerMap(FinSet s, FinSet d) : src(std::move(s)), dst(std::move(d)) {
    image.assign(src.size, Bits(dst.size));
}

Relation compose(const Relation& r, const Relation& s) {
    if (r.dst().size != s.src().size)
        throw std::invalid_argument("compose: shape mismatch, r.dst has " +
                                    std::to_string(r.dst().size) + " elements but s.src has " +
                                    std::to_string(s.src().size));
    Relation out(r.src(), s.dst());
    for (int x = 0; x < r.src().size; ++x)
        r.row(x).for_each([&](int y) { out.row(x) |= s.row(y); });
    return out;
}

Relation identity(const FinSet& x) {
    Relation r(x, x);
    for (int i = 0; i < x.size; ++i) r.add(i, i);
    return r;
}

Relation product(const Relation& r, const Relation& s) {
    const int sn = s.src().size, sm = s.dst().size;
    Relation out(FinSet(r.src().size * sn), FinSet(r.dst().size * sm));
    for (int a = 0; a < r.src().size; ++a)
        for (int c = 0; c < sn; ++c) {
            Bits& row = out.row(a * sn + c);
            r.row(a).for_each([&](int b) {
                s.row(c).for_each([&](int d) { row.set(b * sm + d); });
            });
        }
    return out;
}

Relation converse(const Relation& r) {
    Relation out(r.dst(), r.src());
    for (int x = 0; x < r.src().size; ++x)
        r.row(x).for_each([&](int y) { out.add(y, x); });
    return out;
}

Relation swap_relation(const FinSet& x) {
    const int n = x.size;
    Relation r(FinSet(n * n), FinSet(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.add(i * n + j, j * n + i);
    return r;
}

PowerMap to_power_map(const Relation& r) {
    PowerMap m(r.src(), r.dst());
    for (int x = 0; x < r.src().size; ++x) m.image[x] = r.row(x);
    return m;
}

Relation from_power_map(const PowerMap& m) {
    Relation r(m.src, m.dst);
    for (int x = 0; x < m.src.size; ++x) r.row(x) = m.image[x];
    return r;
}

PowerMap compose_power_maps(const PowerMap& r, const PowerMap& s) {
    if (r.dst.size != s.src.size)
        throw std::invalid_argument("compose_power_maps: shape mismatch, r.dst has " +
                                    std::to_string(r.dst.size) + " elements but s.src has " +
                                    std::to_string(s.src.size));
    PowerMap out(r.src, s.dst);
    for (int x = 0; x < r.src.size; ++x)
        r.image[x].for_each([&](int y) { out.image[x] |= s.image[y]; });
    return out;
}

}  // namespace frobrel
