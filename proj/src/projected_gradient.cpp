#include <algorithm>
#include <stdexcept>

#include "condgrad/solvers.hpp"

namespace condgrad {

Solution projected_gradient(const QuadraticForm& q, const AxisBox& X, DenseVector x0,
                            double L, const StopCriterion& stop) {
    if (!(L > 0.0))
        throw std::invalid_argument("projected_gradient: L must be positive");
    stop.validate();
    if (!all_finite(x0))
        throw std::invalid_argument("projected_gradient: non-finite start point");
    if (!contains(X, x0, 1e-10))
        throw std::invalid_argument("projected_gradient: infeasible start point");

    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = q.n();
    Solution sol;
    OpCounters ctr;
    DenseVector y = std::move(x0);
    DenseVector y_next(n);
    std::uint64_t k = 0;
    bool stopping = false;

    while (true) {
        DenseVector g = q.gradient(y, &ctr);
        const double f = q.value(y, &ctr);
        sol.trace.push_back({0, k, f, detail::box_gap(g, y, X), k == 0 ? 0.0 : 1.0 / L, 0.0,
                             ctr.lmo_calls, ctr.matvecs, detail::elapsed_ns_since(t0)});
        if (stopping) {
            sol.status = SolveStatus::Converged;
            break;
        }
        if ((stop.max_iters > 0 && k >= stop.max_iters) ||
            (stop.max_lmo_calls > 0 && ctr.lmo_calls >= stop.max_lmo_calls)) {
            sol.status = SolveStatus::IterLimit;
            break;
        }

        double step2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y_next[i] = std::clamp(y[i] - g[i] / L, X.lo[i], X.hi[i]);
            const double d = y_next[i] - y[i];
            step2 += d * d;
        }
        // L * ||y_{k+1} - y_k|| is the gradient-mapping residual.
        if (stop.eps_gap >= 0.0 && L * std::sqrt(step2) <= stop.eps_gap) stopping = true;
        std::swap(y, y_next);
        ++k;
    }

    sol.x = y;
    sol.f_value = sol.trace.back().f_value;
    sol.total_iterations = k;
    return sol;
}

} // namespace condgrad
