#include "essig/sparse_vec.hpp"

#include <algorithm>

namespace essig {

SparseVec SparseVec::unit(Key k, Rational c) {
    SparseVec v;
    if (!c.is_zero()) v.entries_.emplace_back(k, std::move(c));
    return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    v.entries_.reserve(entries.size());
    for (auto& e : entries) {
        if (!v.entries_.empty() && v.entries_.back().first == e.first) {
            v.entries_.back().second += e.second;
            if (v.entries_.back().second.is_zero()) v.entries_.pop_back();
        } else if (!e.second.is_zero()) {
            v.entries_.push_back(std::move(e));
        }
    }
    return v;
}

const Rational* SparseVec::find(Key k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Key key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) return &it->second;
    return nullptr;
}

SparseVec SparseVec::scaled(const Rational& c) const {
    SparseVec r;
    if (c.is_zero()) return r;
    r.entries_.reserve(entries_.size());
    for (const auto& [k, x] : entries_) r.entries_.emplace_back(k, x * c);
    return r;
}

SparseVec scale_add(const SparseVec& u, const Rational& c, const SparseVec& v) {
    if (c.is_zero() || v.empty()) return u;
    std::vector<SparseVec::Entry> out;
    out.reserve(u.nnz() + v.nnz());
    auto ui = u.entries().begin(), ue = u.entries().end();
    auto vi = v.entries().begin(), ve = v.entries().end();
    while (ui != ue || vi != ve) {
        if (vi == ve || (ui != ue && ui->first < vi->first)) {
            out.push_back(*ui++);
        } else if (ui == ue || vi->first < ui->first) {
            out.emplace_back(vi->first, c * vi->second);
            ++vi;
        } else {
            Rational s = ui->second + c * vi->second;
            if (!s.is_zero()) out.emplace_back(ui->first, std::move(s));
            ++ui;
            ++vi;
        }
    }
    SparseVec r;
    r.entries_ = std::move(out);  // merge keeps keys sorted, unique, nonzero
    return r;
}

}  // namespace essig
