#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "condgrad/op_counters.hpp"
#include "condgrad/vec.hpp"

namespace condgrad {

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
};

/// Sparse matrix in CSR format with owned storage.
///
/// Immutable after construction and safe to share across threads. The
/// per-row and per-column nonzero maxima are computed once on construction;
/// they capture the double-sparsity parameter s of a matrix whose every row
/// and column holds at most s entries.
class CsrMatrix {
public:
    CsrMatrix() = default;

    /// Build from (row, col, value) triplets. Duplicate coordinates are
    /// summed; entries that cancel to exactly 0.0 are dropped (no epsilon
    /// pruning, so the stored structure is deterministic).
    static CsrMatrix from_triplets(std::span<const Triplet> entries,
                                   std::size_t n_rows, std::size_t n_cols);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }
    std::size_t nnz() const { return values_.size(); }
    std::size_t row_nnz_max() const { return row_nnz_max_; }
    std::size_t col_nnz_max() const { return col_nnz_max_; }

    const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::size_t>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }

    /// Stored entries in row-major order (the deduplicated triplet set).
    std::vector<Triplet> entries() const;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
    std::size_t row_nnz_max_ = 0;
    std::size_t col_nnz_max_ = 0;
};

/// y = A x. Performs exactly nnz(A) fused multiply-adds.
DenseVector matvec(const CsrMatrix& A, std::span<const double> x,
                   OpCounters* counters = nullptr);

/// y = A^T v via row-major scatter, also exactly nnz(A) multiply-adds.
/// No CSC copy is kept; one storage format, fewer consistency bugs.
DenseVector matvec_transpose(const CsrMatrix& A, std::span<const double> v,
                             OpCounters* counters = nullptr);

} // namespace condgrad
