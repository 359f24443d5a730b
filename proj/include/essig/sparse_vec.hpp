#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "essig/rational.hpp"

namespace essig {

// Sparse vector over an ordered 64-bit key space. No zero entry is ever
// stored; entries are kept sorted by key, so iteration is deterministic.
class SparseVec {
public:
    using Key = std::uint64_t;
    using Entry = std::pair<Key, Rational>;

    SparseVec() = default;

    static SparseVec unit(Key k, Rational c = Rational(1));
    // Sorts, merges duplicate keys, drops zeros.
    static SparseVec from_entries(std::vector<Entry> entries);

    bool empty() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    // nullptr when the key is absent.
    const Rational* find(Key k) const;
    // Entry with the smallest key; undefined on the empty vector.
    const Entry& leading() const { return entries_.front(); }

    SparseVec scaled(const Rational& c) const;

    friend bool operator==(const SparseVec&, const SparseVec&) = default;

private:
    friend SparseVec scale_add(const SparseVec&, const Rational&, const SparseVec&);
    std::vector<Entry> entries_;
};

// u + c*v with zero results dropped.
SparseVec scale_add(const SparseVec& u, const Rational& c, const SparseVec& v);

}  // namespace essig
