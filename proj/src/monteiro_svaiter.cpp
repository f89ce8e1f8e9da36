#include <cmath>
#include <stdexcept>

#include "condgrad/solvers.hpp"

namespace condgrad {

double ms_coefficient(double kappa, double A_k) {
    return (1.0 / kappa + std::sqrt(1.0 / (kappa * kappa) + 4.0 * A_k / kappa)) / 2.0;
}

Solution monteiro_svaiter(const QuadraticForm& q, const AxisBox& X, DenseVector x0,
                          double kappa, const StopCriterion& stop, const MsOptions& opts) {
    if (!(kappa > 0.0))
        throw std::invalid_argument("monteiro_svaiter: kappa must be positive");
    stop.validate();
    if (!all_finite(x0))
        throw std::invalid_argument("monteiro_svaiter: non-finite start point");
    if (!contains(X, x0, 1e-10))
        throw std::invalid_argument("monteiro_svaiter: infeasible start point");

    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = q.n();
    const double DX = box_diameter(X);
    const double gap_floor = opts.gap_floor_coeff * kappa * DX * DX;

    Solution sol;
    GradientState state(q, x0); // carries y; z evolves unconstrained
    OpCounters& ctr = state.counters();
    DenseVector z = x0;
    DenseVector anchor(n), gF(n);
    double A_k = 0.0;
    std::uint64_t outer = 0, total_inner = 0;

    sol.trace.push_back({0, 0, state.value(), detail::box_gap(state.g(), state.y(), X), 0.0,
                         0.0, ctr.lmo_calls, ctr.matvecs, detail::elapsed_ns_since(t0)});

    while (true) {
        const double outer_gap = detail::box_gap(state.g(), state.y(), X);
        if (stop.eps_gap >= 0.0 && outer_gap <= stop.eps_gap) {
            sol.status = SolveStatus::Converged;
            break;
        }
        if ((stop.max_iters > 0 && outer >= stop.max_iters) ||
            (stop.max_lmo_calls > 0 && ctr.lmo_calls >= stop.max_lmo_calls)) {
            sol.status = SolveStatus::IterLimit;
            break;
        }

        const double a = ms_coefficient(kappa, A_k);
        const double A_next = A_k + a;
        for (std::size_t i = 0; i < n; ++i)
            anchor[i] = (A_k * state.y()[i] + a * z[i]) / A_next;

        // Inner conditional-gradient solve of min_{y in X} F_{kappa,anchor}(y),
        // warm-started from the current iterate, until the acceptance
        // inequality ||grad F(y)|| <= (kappa/2) ||y - anchor|| holds.
        state.refresh(q);
        std::uint64_t inner = 0;
        bool unreachable = false, budget_hit = false;
        double lhs = 0.0, rhs = 0.0;
        while (true) {
            double lhs2 = 0.0, dist2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = state.y()[i] - anchor[i];
                gF[i] = state.g()[i] + kappa * d;
                lhs2 += gF[i] * gF[i];
                dist2 += d * d;
            }
            lhs = std::sqrt(lhs2);
            rhs = 0.5 * kappa * std::sqrt(dist2);
            if (lhs <= rhs) break;

            const double gapF = detail::box_gap(gF, state.y(), X);
            if (gapF <= gap_floor) {
                // Constrained prox minimizer sits on the boundary with a
                // nonzero gradient; the inequality cannot be met.
                unreachable = true;
                break;
            }
            // The oracle budget must bound the subproblem work too, not just
            // the outer steps.
            if (stop.max_lmo_calls > 0 && ctr.lmo_calls >= stop.max_lmo_calls) {
                budget_hit = true;
                break;
            }
            DenseVector v = lmo_box(X, gF, &ctr);
            if (opts.inner_rule == StepRule::Standard) {
                state.step(q, v, 2.0 / static_cast<double>(inner + 2));
            } else {
                state.step_exact(q, v, kappa, &anchor);
            }
            ++inner;
            ++total_inner;
        }
        if (unreachable) {
            sol.status = SolveStatus::ConditionUnreachable;
            break;
        }
        if (budget_hit) {
            sol.status = SolveStatus::IterLimit;
            break;
        }

        ++outer;
        A_k = A_next;
        for (std::size_t i = 0; i < n; ++i) z[i] -= a * state.g()[i];
        if (opts.keep_certificates)
            sol.ms_certificates.push_back({anchor, state.y(), lhs, rhs, inner});
        sol.trace.push_back({outer, total_inner, state.value(),
                             detail::box_gap(state.g(), state.y(), X), 0.0, 0.0,
                             ctr.lmo_calls, ctr.matvecs, detail::elapsed_ns_since(t0)});
    }

    sol.x = state.y();
    sol.f_value = state.value();
    sol.total_iterations = outer;
    return sol;
}

} // namespace condgrad
