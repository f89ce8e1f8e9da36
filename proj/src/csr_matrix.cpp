#include "condgrad/csr_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace condgrad {

CsrMatrix CsrMatrix::from_triplets(std::span<const Triplet> entries,
                                   std::size_t n_rows, std::size_t n_cols) {
    for (const Triplet& t : entries) {
        if (t.row >= n_rows || t.col >= n_cols)
            throw std::invalid_argument("triplet index out of range");
    }

    std::vector<Triplet> sorted(entries.begin(), entries.end());
    std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    CsrMatrix m;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.row_ptr_.assign(n_rows + 1, 0);
    m.col_idx_.reserve(sorted.size());
    m.values_.reserve(sorted.size());

    std::vector<std::size_t> col_counts(n_cols, 0);
    std::size_t i = 0;
    for (std::size_t r = 0; r < n_rows; ++r) {
        while (i < sorted.size() && sorted[i].row == r) {
            const std::size_t c = sorted[i].col;
            double sum = 0.0;
            while (i < sorted.size() && sorted[i].row == r && sorted[i].col == c) {
                sum += sorted[i].value;
                ++i;
            }
            if (sum != 0.0) { // exact cancellation drops the entry
                m.col_idx_.push_back(c);
                m.values_.push_back(sum);
                ++col_counts[c];
            }
        }
        m.row_ptr_[r + 1] = m.values_.size();
    }

    for (std::size_t r = 0; r < n_rows; ++r)
        m.row_nnz_max_ = std::max(m.row_nnz_max_, m.row_ptr_[r + 1] - m.row_ptr_[r]);
    for (std::size_t c = 0; c < n_cols; ++c)
        m.col_nnz_max_ = std::max(m.col_nnz_max_, col_counts[c]);
    return m;
}

std::vector<Triplet> CsrMatrix::entries() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            out.push_back({r, col_idx_[k], values_[k]});
    return out;
}

DenseVector matvec(const CsrMatrix& A, std::span<const double> x, OpCounters* counters) {
    if (x.size() != A.n_cols())
        throw std::invalid_argument("matvec: length mismatch");
    DenseVector y(A.n_rows(), 0.0);
    const auto& ptr = A.row_ptr();
    const auto& col = A.col_idx();
    const auto& val = A.values();
    for (std::size_t r = 0; r < A.n_rows(); ++r) {
        double sum = 0.0;
        for (std::size_t k = ptr[r]; k < ptr[r + 1]; ++k)
            sum += val[k] * x[col[k]];
        y[r] = sum;
    }
    if (counters) counters->add_matvec(A.nnz());
    return y;
}

DenseVector matvec_transpose(const CsrMatrix& A, std::span<const double> v, OpCounters* counters) {
    if (v.size() != A.n_rows())
        throw std::invalid_argument("matvec_transpose: length mismatch");
    DenseVector y(A.n_cols(), 0.0);
    const auto& ptr = A.row_ptr();
    const auto& col = A.col_idx();
    const auto& val = A.values();
    for (std::size_t r = 0; r < A.n_rows(); ++r) {
        const double vr = v[r];
        for (std::size_t k = ptr[r]; k < ptr[r + 1]; ++k)
            y[col[k]] += val[k] * vr;
    }
    if (counters) counters->add_matvec(A.nnz());
    return y;
}

} // namespace condgrad
