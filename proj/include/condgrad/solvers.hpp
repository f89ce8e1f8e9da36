#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "condgrad/domains.hpp"
#include "condgrad/objective.hpp"

namespace condgrad {

/// Step-size strategy for conditional-gradient loops: the predetermined
/// schedule gamma_k = 2/(k+1) or the closed-form exact line search.
enum class StepRule { Standard, ExactLineSearch };

/// Runtime stopping rules. A negative eps_gap and zero budgets mean
/// "disabled"; at least one bound must be active.
struct StopCriterion {
    double eps_gap = -1.0;           ///< stop once the duality gap falls to this
    std::uint64_t max_iters = 0;     ///< cap on steps taken
    std::uint64_t max_lmo_calls = 0; ///< cap on oracle invocations

    bool any_active() const { return eps_gap >= 0.0 || max_iters > 0 || max_lmo_calls > 0; }
    void validate() const;
};

enum class SolveStatus { Converged, IterLimit, ConditionUnreachable };

/// One per-iterate trace row. Counters are cumulative over the run, so
/// per-iteration costs are first differences.
struct IterRecord {
    std::uint64_t outer = 0; ///< restart (shrinking CG) or outer step (accelerated)
    std::uint64_t inner = 0;
    double f_value = 0.0;
    double fw_gap = 0.0;
    double gamma = 0.0;  ///< step size that produced this iterate (0 for the start)
    double radius = 0.0; ///< ball radius in force (shrinking CG only, else 0)
    std::uint64_t lmo_count = 0;
    std::uint64_t matvec_count = 0;
    std::int64_t elapsed_ns = 0;
};

/// Convex-combination ledger over {x0, oracle outputs}: the iterate always
/// equals sum w_i * atom_i with w >= 0, sum w = 1.
struct HullLedger {
    std::vector<DenseVector> atoms;
    std::vector<double> weights;

    DenseVector reconstruct() const;
};

/// Inexactness certificate of one accepted outer step of the accelerated
/// method: ||grad F_{kappa,anchor}(y)||_2 <= (kappa/2) ||y - anchor||_2.
struct MsCertificate {
    DenseVector anchor;
    DenseVector y;
    double grad_norm = 0.0;
    double threshold = 0.0;
    std::uint64_t inner_iters = 0;
};

struct Solution {
    DenseVector x;
    double f_value = 0.0;
    std::vector<IterRecord> trace;
    SolveStatus status = SolveStatus::Converged;
    std::uint64_t total_iterations = 0; ///< steps taken (inner steps for restarted runs)
    std::optional<HullLedger> hull;     ///< tracked for classical runs in small dimensions
    std::vector<MsCertificate> ms_certificates;
};

/// Duality gap <grad f(y), y - LMO(grad f(y))>; nonnegative, and an upper
/// bound on f(y) - f* for convex f.
double fw_gap(const QuadraticForm& q, const DenseVector& y, const AxisBox& domain,
              OpCounters* counters = nullptr);
double fw_gap(const QuadraticForm& q, const DenseVector& y, const Simplex& domain,
              OpCounters* counters = nullptr);
double fw_gap(const ProxObjective& F, const DenseVector& y, const AxisBox& domain,
              OpCounters* counters = nullptr);

namespace detail {

/// Gap over a box straight from a cached gradient; no oracle call, no matvec.
inline double box_gap(std::span<const double> g, std::span<const double> y, const AxisBox& X) {
    double gap = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double mn = g[i] > 0.0 ? g[i] * X.lo[i] : g[i] * X.hi[i];
        gap += g[i] * y[i] - mn;
    }
    return gap;
}

inline std::int64_t elapsed_ns_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

template <class Domain>
DenseVector domain_lmo(const Domain& d, std::span<const double> p, OpCounters* c) {
    if constexpr (std::is_same_v<Domain, Simplex>)
        return lmo_simplex(d, p, c);
    else
        return lmo_box(d, p, c);
}

Solution fw_core_box(const QuadraticForm& q, double kappa, const DenseVector* anchor,
                     const AxisBox& domain, DenseVector x0, StepRule rule,
                     const StopCriterion& stop);

} // namespace detail

/// Classical conditional-gradient (Frank-Wolfe) method.
///
/// Iterates y_k = (1 - gamma_k) y_{k-1} + gamma_k x_k with
/// x_k = LMO(grad f(y_{k-1})); with the standard schedule gamma_1 = 1, so the
/// first step lands on the first oracle vertex. Each iteration consumes
/// exactly two sparse matvecs through the cached-gradient recurrence. The
/// hull ledger is maintained for dimensions up to 64.
template <class Domain>
Solution frank_wolfe(const QuadraticForm& q, const Domain& domain, DenseVector x0,
                     StepRule rule, const StopCriterion& stop);

/// Frank-Wolfe on the prox-regularized objective (used as the inner solver of
/// the accelerated method); reports F-values and F-gaps in the trace.
Solution frank_wolfe(const ProxObjective& F, const AxisBox& domain, DenseVector x0,
                     StepRule rule, const StopCriterion& stop);

struct ScgOptions {
    bool stop_on_gap = true;             ///< stop early once the gap over X reaches eps
    std::uint64_t max_total_inner = 0;   ///< external budget across restarts; 0 = none
    std::uint64_t max_lmo_calls = 0;     ///< external budget; 0 = none
    std::uint64_t refresh_every = 10000; ///< extra gradient refresh cadence
};

/// Shrinking conditional gradient: restarted Frank-Wolfe over the
/// intersection of X with an inf-ball around the previous restart point,
/// radius divided by sqrt(2) each restart.
///
/// Runs ceil(8 L / mu) inner steps per restart and
/// T = ceil(log2(max(mu R0^2 / eps, 2))) restarts (R0 = diameter of X), the
/// schedule whose total matches the logarithmic complexity form. Completing
/// the schedule certifies f-accuracy eps and reports Converged; only an
/// external budget yields IterLimit.
Solution shrinking_cg(const QuadraticForm& q, const AxisBox& X, DenseVector x0, double L,
                      double mu, double eps, StepRule rule = StepRule::ExactLineSearch,
                      const ScgOptions& opts = {});

/// Coefficient rule of the accelerated outer loop:
/// a_{k+1} = (1/kappa + sqrt(1/kappa^2 + 4 A_k / kappa)) / 2.
double ms_coefficient(double kappa, double A_k);

struct MsOptions {
    StepRule inner_rule = StepRule::ExactLineSearch;
    /// Inner gap floor coefficient: if the subproblem gap drops below
    /// coeff * kappa * D_X^2 with the acceptance inequality still violated,
    /// the run stops with ConditionUnreachable (constrained prox minimizer on
    /// the boundary).
    double gap_floor_coeff = 1e-12;
    bool keep_certificates = true;
};

/// Monteiro-Svaiter accelerated proximal-point outer loop; each outer step
/// solves min over X of F_{kappa,x_{k+1}} by inner Frank-Wolfe until
/// ||grad F(y)||_2 <= (kappa/2)||y - x_{k+1}||_2, then updates
/// z_{k+1} = z_k - a_{k+1} grad f(y_{k+1}).
Solution monteiro_svaiter(const QuadraticForm& q, const AxisBox& X, DenseVector x0,
                          double kappa, const StopCriterion& stop, const MsOptions& opts = {});

/// Projected-gradient baseline: y <- clip(y - grad f(y)/L). Stops when
/// L * ||y_{k+1} - y_k||_2 <= eps_gap; serves as the independent reference
/// solver for accuracy measurements.
Solution projected_gradient(const QuadraticForm& q, const AxisBox& X, DenseVector x0,
                            double L, const StopCriterion& stop);

// ---------------------------------------------------------------------------

namespace detail {

constexpr std::size_t kHullDimCap = 64;

Solution fw_core_simplex(const QuadraticForm& q, const Simplex& domain, DenseVector x0,
                         StepRule rule, const StopCriterion& stop);

} // namespace detail

template <class Domain>
Solution frank_wolfe(const QuadraticForm& q, const Domain& domain, DenseVector x0,
                     StepRule rule, const StopCriterion& stop) {
    if constexpr (std::is_same_v<Domain, Simplex>)
        return detail::fw_core_simplex(q, domain, std::move(x0), rule, stop);
    else
        return detail::fw_core_box(q, 0.0, nullptr, domain, std::move(x0), rule, stop);
}

} // namespace condgrad
