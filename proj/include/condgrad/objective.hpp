#pragma once

#include <cstdint>
#include <stdexcept>

#include "condgrad/csr_matrix.hpp"
#include "condgrad/op_counters.hpp"
#include "condgrad/vec.hpp"

namespace condgrad {

/// f(x) = 0.5 * ||A x||_2^2 for a square sparse A.
class QuadraticForm {
public:
    explicit QuadraticForm(CsrMatrix A);

    std::size_t n() const { return A_.n_cols(); }
    const CsrMatrix& matrix() const { return A_; }

    /// One matvec.
    double value(std::span<const double> x, OpCounters* counters = nullptr) const;

    /// grad f(x) = A^T A x, two sparse matvecs.
    DenseVector gradient(std::span<const double> x, OpCounters* counters = nullptr) const;

private:
    CsrMatrix A_;
};

/// Prox-regularized objective F(y) = f(y) + (kappa/2) ||y - anchor||_2^2.
/// The accelerated outer loop re-anchors this around successive prox centers.
struct ProxObjective {
    const QuadraticForm& base;
    double kappa;
    DenseVector anchor;

    double value(std::span<const double> y, OpCounters* counters = nullptr) const;
    DenseVector gradient(std::span<const double> y, OpCounters* counters = nullptr) const;
};

/// Iterate state for conditional-gradient loops on a QuadraticForm.
///
/// Caches w = A y and g = A^T A y so that one step toward a new vertex costs
/// exactly two sparse matvecs:
///     y <- (1-gamma) y + gamma x,  w <- (1-gamma) w + gamma (A x),
///     g <- (1-gamma) g + gamma (A^T A x).
/// Single-owner mutable; never shared across threads.
class GradientState {
public:
    GradientState(const QuadraticForm& q, DenseVector y0); // two matvecs

    const DenseVector& y() const { return y_; }
    const DenseVector& w() const { return w_; }
    const DenseVector& g() const { return g_; }

    /// f(y) from the cached w; free of matvecs.
    double value() const { return 0.5 * dot(w_, w_); }

    /// Blend toward x_new with the given gamma in [0,1]. Always consumes
    /// exactly two sparse matvecs, including gamma = 0.
    void step(const QuadraticForm& q, std::span<const double> x_new, double gamma);

    /// Blend toward x_new with the exact-line-search gamma for the
    /// (optionally prox-regularized) quadratic; same two-matvec budget.
    /// Returns the clamped gamma.
    double step_exact(const QuadraticForm& q, std::span<const double> x_new,
                      double kappa = 0.0, const DenseVector* anchor = nullptr);

    /// Recompute w, g from y; used at restart boundaries and periodically to
    /// cap roundoff drift of the blending recurrence. Two matvecs.
    void refresh(const QuadraticForm& q);

    OpCounters& counters() { return counters_; }
    const OpCounters& counters() const { return counters_; }
    std::uint64_t matvec_count() const { return counters_.matvecs; }

private:
    void apply_blend(const QuadraticForm& q, std::span<const double> x_new,
                     const DenseVector& u, double gamma);

    DenseVector y_, w_, g_;
    OpCounters counters_;
};

/// argmin over gamma in [0,1] of f(y + gamma (x - y)) in closed form,
/// gamma_hat = -<A y, A d> / ||A d||^2 with d = x - y, clamped to [0,1].
/// Degenerate directions (||A d|| = 0 with kappa = 0) return 0.
double exact_linesearch(const QuadraticForm& q, const DenseVector& y, const DenseVector& x);

/// Same, for the prox objective: the kappa term enters the numerator and
/// denominator analytically, so the search stays matvec-bounded.
double exact_linesearch(const ProxObjective& F, const DenseVector& y, const DenseVector& x);

/// Closed-form step size from precomputed images w = A y and u = A x.
/// Shared by the solvers so a full conditional-gradient step needs only the
/// two matvecs already budgeted in GradientState.
double exact_step_size(std::span<const double> w, std::span<const double> u,
                       std::span<const double> y, std::span<const double> x,
                       double kappa = 0.0, const DenseVector* anchor = nullptr);

struct SpectralEstimate {
    double L = 0.0;  ///< upper bound on lambda_max(A^T A), inflated by (1+tol)
    double mu = 0.0; ///< estimate of lambda_min(A^T A)
    int iters_max = 0;
    int iters_min = 0;
};

/// Thrown when power iteration fails to settle; carries the best estimates.
class SpectralError : public std::runtime_error {
public:
    SpectralError(const std::string& what, SpectralEstimate best)
        : std::runtime_error(what), best_estimate(best) {}
    SpectralEstimate best_estimate;
};

/// Power iteration for lambda_max(A^T A); lambda_min via power iteration on
/// (L I - A^T A). Deterministic start vector.
SpectralEstimate estimate_spectral(const QuadraticForm& q, double tol = 1e-8,
                                   int max_iter = 20000);

} // namespace condgrad
