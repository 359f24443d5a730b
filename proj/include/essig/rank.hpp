#pragma once

#include <optional>
#include <vector>

#include "essig/sparse_vec.hpp"

namespace essig {

// Incremental exact rank test. Pivot rows are kept in reduced echelon form,
// sorted by leading key, leading coefficient normalized to 1. Single writer;
// reads of a finished accumulator are safe to share.
class RankAccumulator {
public:
    // True iff v was not in the span of the previously inserted rows;
    // the accumulator gains one pivot exactly in that case.
    bool insert(SparseVec v);

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<SparseVec>& pivots() const { return pivots_; }

    // Residual of v after elimination against the current pivots.
    SparseVec reduce(SparseVec v) const;

private:
    std::vector<SparseVec> pivots_;
};

// Row reduction that tracks coordinates relative to the inserted basis
// vectors, so targets can be expressed as exact combinations of them.
class SpanSolver {
public:
    // Returns false if b was already in the span (no row added).
    bool add_basis_vector(const SparseVec& b);

    std::size_t basis_count() const { return basis_count_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Coefficients c with target = sum c_i * basis_i, or nullopt if the
    // target lies outside the span. Dependent basis vectors get weight 0.
    std::optional<std::vector<Rational>> coordinates(const SparseVec& target) const;

private:
    struct Row {
        SparseVec v;                  // reduced, leading coefficient 1
        std::vector<Rational> coeff;  // v as a combination of the basis
    };
    std::vector<Row> rows_;
    std::size_t basis_count_ = 0;
};

}  // namespace essig
