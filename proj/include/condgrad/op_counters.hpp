#pragma once

#include <cstdint>

namespace condgrad {

/// Arithmetic-operation counters owned by a single solver run.
/// `fused_mul_adds` grows by exactly nnz(A) per sparse matrix application,
/// which makes the O(sn) per-iteration cost claims directly measurable.
struct OpCounters {
    std::uint64_t matvecs = 0;        ///< applications of A or A^T
    std::uint64_t fused_mul_adds = 0; ///< multiply-adds inside those applications
    std::uint64_t lmo_calls = 0;      ///< linear-minimization-oracle invocations

    void add_matvec(std::uint64_t nnz) {
        ++matvecs;
        fused_mul_adds += nnz;
    }
};

} // namespace condgrad
