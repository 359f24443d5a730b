#include "essig/rank.hpp"

#include <algorithm>

namespace essig {

SparseVec RankAccumulator::reduce(SparseVec v) const {
    for (const auto& pivot : pivots_) {
        if (v.empty()) break;
        if (pivot.leading().first < v.leading().first) continue;
        if (const Rational* c = v.find(pivot.leading().first)) {
            v = scale_add(v, -*c, pivot);
        }
    }
    return v;
}

bool RankAccumulator::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    v = v.scaled(v.leading().second.inverse());
    // back-substitute to keep the stored rows fully reduced
    for (auto& pivot : pivots_) {
        if (const Rational* c = pivot.find(v.leading().first)) {
            pivot = scale_add(pivot, -*c, v);
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), v.leading().first,
                                [](const SparseVec& row, SparseVec::Key k) {
                                    return row.leading().first < k;
                                });
    pivots_.insert(pos, std::move(v));
    return true;
}

bool SpanSolver::add_basis_vector(const SparseVec& b) {
    std::size_t index = basis_count_++;
    SparseVec v = b;
    std::vector<Rational> coeff(basis_count_, Rational(0));
    coeff[index] = Rational(1);
    for (const auto& row : rows_) {
        if (v.empty()) break;
        if (const Rational* c = v.find(row.v.leading().first)) {
            Rational f = *c;
            v = scale_add(v, -f, row.v);
            for (std::size_t i = 0; i < row.coeff.size(); ++i) coeff[i] -= f * row.coeff[i];
        }
    }
    if (v.empty()) return false;
    Rational inv = v.leading().second.inverse();
    v = v.scaled(inv);
    for (auto& c : coeff) c *= inv;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), v.leading().first,
                                [](const Row& row, SparseVec::Key k) {
                                    return row.v.leading().first < k;
                                });
    rows_.insert(pos, Row{std::move(v), std::move(coeff)});
    return true;
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(const SparseVec& target) const {
    SparseVec v = target;
    std::vector<Rational> out(basis_count_, Rational(0));
    for (const auto& row : rows_) {
        if (v.empty()) break;
        if (const Rational* c = v.find(row.v.leading().first)) {
            Rational f = *c;
            v = scale_add(v, -f, row.v);
            for (std::size_t i = 0; i < row.coeff.size(); ++i) out[i] += f * row.coeff[i];
        }
    }
    if (!v.empty()) return std::nullopt;
    return out;
}

}  // namespace essig
