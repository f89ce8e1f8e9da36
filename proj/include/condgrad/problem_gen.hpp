#pragma once

#include <cstdint>

#include "condgrad/csr_matrix.hpp"
#include "condgrad/domains.hpp"

namespace condgrad {

/// Uniform per-axis bounds; the default is the unit inf-ball [-1,1]^n.
struct BoxSpec {
    double lo = -1.0;
    double hi = 1.0;
};

struct ProblemSpec {
    std::size_t n = 0;
    std::size_t s = 1;          ///< per-row/column nonzero cap, 1 <= s <= n
    double mu_target = 1.0;     ///< lower bound scale for the symmetric part of A
    std::uint64_t seed = 0;
    BoxSpec domain;
};

struct GeneratedProblem {
    CsrMatrix A;
    AxisBox domain;
};

/// A = mu_target * I + S with at most s-1 off-diagonal entries per row and
/// per column, off-diagonal absolute row/column mass capped at
/// 0.5 * mu_target. The cap keeps the symmetric part of A above
/// 0.5 * mu_target * I (Gershgorin), so sigma_min(A) >= 0.5 * mu_target and
/// lambda_min(A^T A) >= 0.25 * mu_target^2 without any eigensolve at
/// generation time. Deterministic in the seed.
GeneratedProblem generate_problem(const ProblemSpec& spec);

/// Deterministic interior start point: coordinates uniform over the box,
/// drawn from a stream derived from the seed. Interior starts avoid the
/// center-symmetric degeneracy of vertex starts on sign-symmetric instances.
DenseVector initial_point(const AxisBox& box, std::uint64_t seed);

} // namespace condgrad
