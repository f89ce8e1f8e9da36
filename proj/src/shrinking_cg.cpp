#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "condgrad/solvers.hpp"

namespace condgrad {

Solution shrinking_cg(const QuadraticForm& q, const AxisBox& X, DenseVector x0, double L,
                      double mu, double eps, StepRule rule, const ScgOptions& opts) {
    if (!(mu > 0.0) || !(L >= mu))
        throw std::invalid_argument("shrinking_cg: need L >= mu > 0");
    if (!(eps > 0.0))
        throw std::invalid_argument("shrinking_cg: eps must be positive");
    if (!all_finite(x0))
        throw std::invalid_argument("shrinking_cg: non-finite start point");
    if (!contains(X, x0, 1e-10))
        throw std::invalid_argument("shrinking_cg: infeasible start point");

    const auto t0 = std::chrono::steady_clock::now();
    const double R0 = box_diameter(X);
    const auto inner_per_restart = static_cast<std::uint64_t>(std::ceil(8.0 * L / mu));
    const auto restarts = static_cast<std::uint64_t>(
        std::ceil(std::log2(std::max(mu * R0 * R0 / eps, 2.0))));

    Solution sol;
    GradientState state(q, std::move(x0));
    OpCounters& ctr = state.counters();

    double radius = R0;
    std::uint64_t total_inner = 0;
    bool done = false;
    sol.status = SolveStatus::Converged; // the completed schedule certifies eps

    double gap = detail::box_gap(state.g(), state.y(), X);
    sol.trace.push_back(
        {0, 0, state.value(), gap, 0.0, R0, ctr.lmo_calls, ctr.matvecs, detail::elapsed_ns_since(t0)});
    if (opts.stop_on_gap && gap <= eps) done = true;
    if (R0 == 0.0) done = true; // point domain: x0 is the only feasible point

    for (std::uint64_t t = 1; t <= restarts && !done; ++t) {
        // Restart center must stay feasible for the intersection; iterates are
        // convex combinations of feasible points, so only roundoff is clipped.
        DenseVector center = state.y();
        for (std::size_t i = 0; i < center.size(); ++i)
            center[i] = std::clamp(center[i], X.lo[i], X.hi[i]);
        const AxisBox Xt = intersect_box_ball(X, center, radius);

        if (t > 1) state.refresh(q);
        sol.trace.push_back({t, 0, state.value(), detail::box_gap(state.g(), state.y(), X),
                             0.0, radius, ctr.lmo_calls, ctr.matvecs,
                             detail::elapsed_ns_since(t0)});

        for (std::uint64_t k = 1; k <= inner_per_restart; ++k) {
            if ((opts.max_total_inner > 0 && total_inner >= opts.max_total_inner) ||
                (opts.max_lmo_calls > 0 && ctr.lmo_calls >= opts.max_lmo_calls)) {
                sol.status = SolveStatus::IterLimit;
                done = true;
                break;
            }

            DenseVector v = lmo_box(Xt, state.g(), &ctr);
            double gamma;
            if (rule == StepRule::Standard) {
                gamma = 2.0 / static_cast<double>(k + 1);
                state.step(q, v, gamma);
            } else {
                gamma = state.step_exact(q, v);
            }
            ++total_inner;
            if (opts.refresh_every > 0 && k % opts.refresh_every == 0) state.refresh(q);

            gap = detail::box_gap(state.g(), state.y(), X);
            sol.trace.push_back({t, k, state.value(), gap, gamma, radius, ctr.lmo_calls,
                                 ctr.matvecs, detail::elapsed_ns_since(t0)});
            if (opts.stop_on_gap && gap <= eps) {
                done = true;
                break;
            }
        }
        radius /= std::sqrt(2.0);
    }

    sol.x = state.y();
    sol.f_value = state.value();
    sol.total_iterations = total_inner;
    return sol;
}

} // namespace condgrad
