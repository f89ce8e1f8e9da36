#include "condgrad/objective.hpp"

#include <algorithm>
#include <cmath>

#include "condgrad/rng.hpp"

namespace condgrad {

QuadraticForm::QuadraticForm(CsrMatrix A) : A_(std::move(A)) {
    if (A_.n_rows() != A_.n_cols())
        throw std::invalid_argument("QuadraticForm: matrix must be square");
}

double QuadraticForm::value(std::span<const double> x, OpCounters* counters) const {
    DenseVector ax = matvec(A_, x, counters);
    return 0.5 * dot(ax, ax);
}

DenseVector QuadraticForm::gradient(std::span<const double> x, OpCounters* counters) const {
    DenseVector ax = matvec(A_, x, counters);
    return matvec_transpose(A_, ax, counters);
}

double ProxObjective::value(std::span<const double> y, OpCounters* counters) const {
    check_same_length(y, anchor);
    double reg = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - anchor[i];
        reg += d * d;
    }
    return base.value(y, counters) + 0.5 * kappa * reg;
}

DenseVector ProxObjective::gradient(std::span<const double> y, OpCounters* counters) const {
    check_same_length(y, anchor);
    DenseVector g = base.gradient(y, counters);
    for (std::size_t i = 0; i < y.size(); ++i) g[i] += kappa * (y[i] - anchor[i]);
    return g;
}

GradientState::GradientState(const QuadraticForm& q, DenseVector y0) : y_(std::move(y0)) {
    if (y_.size() != q.n())
        throw std::invalid_argument("GradientState: length mismatch");
    if (!all_finite(y_))
        throw std::invalid_argument("GradientState: non-finite start point");
    w_ = matvec(q.matrix(), y_, &counters_);
    g_ = matvec_transpose(q.matrix(), w_, &counters_);
}

void GradientState::apply_blend(const QuadraticForm& q, std::span<const double> x_new,
                                const DenseVector& u, double gamma) {
    DenseVector t = matvec_transpose(q.matrix(), u, &counters_);
    blend(gamma, x_new, y_);
    blend(gamma, u, w_);
    blend(gamma, t, g_);
}

void GradientState::step(const QuadraticForm& q, std::span<const double> x_new, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("step: gamma outside [0,1]");
    DenseVector u = matvec(q.matrix(), x_new, &counters_);
    apply_blend(q, x_new, u, gamma);
}

double GradientState::step_exact(const QuadraticForm& q, std::span<const double> x_new,
                                 double kappa, const DenseVector* anchor) {
    DenseVector u = matvec(q.matrix(), x_new, &counters_);
    const double gamma = exact_step_size(w_, u, y_, x_new, kappa, anchor);
    apply_blend(q, x_new, u, gamma);
    return gamma;
}

void GradientState::refresh(const QuadraticForm& q) {
    w_ = matvec(q.matrix(), y_, &counters_);
    g_ = matvec_transpose(q.matrix(), w_, &counters_);
}

double exact_step_size(std::span<const double> w, std::span<const double> u,
                       std::span<const double> y, std::span<const double> x,
                       double kappa, const DenseVector* anchor) {
    // phi(gamma) = f(y + gamma d) + (kappa/2)||y + gamma d - anchor||^2, d = x - y;
    // phi'(0) = <A y, A d> + kappa <y - anchor, d>, phi'' = ||A d||^2 + kappa ||d||^2.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double ad = u[i] - w[i];
        num -= w[i] * ad;
        den += ad * ad;
    }
    if (kappa > 0.0) {
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double d = x[i] - y[i];
            const double offs = anchor ? (y[i] - (*anchor)[i]) : y[i];
            num -= kappa * offs * d;
            den += kappa * d * d;
        }
    }
    if (den <= 0.0) return 0.0;
    return std::clamp(num / den, 0.0, 1.0);
}

double exact_linesearch(const QuadraticForm& q, const DenseVector& y, const DenseVector& x) {
    DenseVector w = matvec(q.matrix(), y);
    DenseVector u = matvec(q.matrix(), x);
    return exact_step_size(w, u, y, x);
}

double exact_linesearch(const ProxObjective& F, const DenseVector& y, const DenseVector& x) {
    DenseVector w = matvec(F.base.matrix(), y);
    DenseVector u = matvec(F.base.matrix(), x);
    return exact_step_size(w, u, y, x, F.kappa, &F.anchor);
}

namespace {

// Power iteration for the top eigenvalue of a symmetric PSD operator given as
// op(v). Returns the last Rayleigh quotient; `converged` reports whether the
// eigenvalue settled to the relative tolerance.
template <class Op>
double power_iteration(std::size_t n, Op&& op, double tol, int max_iter,
                       int& iters, bool& converged) {
    SplitMix64 rng(0x5EED0F0FD1CEULL);
    DenseVector v(n);
    for (double& vi : v) vi = 2.0 * rng.next_double() - 1.0;
    double nv = norm2(v);
    for (double& vi : v) vi /= nv;

    double lambda = 0.0;
    converged = false;
    for (iters = 1; iters <= max_iter; ++iters) {
        DenseVector u = op(v);
        const double lambda_new = dot(v, u);
        const double nu = norm2(u);
        if (nu == 0.0) { // operator annihilates v: eigenvalue 0 along this direction
            lambda = 0.0;
            converged = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / nu;
        if (iters > 1 && std::abs(lambda_new - lambda) <= tol * std::max(std::abs(lambda_new), 1e-300)) {
            lambda = lambda_new;
            converged = true;
            break;
        }
        lambda = lambda_new;
    }
    return lambda;
}

} // namespace

SpectralEstimate estimate_spectral(const QuadraticForm& q, double tol, int max_iter) {
    const std::size_t n = q.n();
    const CsrMatrix& A = q.matrix();

    SpectralEstimate est;
    bool ok_max = false;
    const double lam_max = power_iteration(
        n, [&](const DenseVector& v) { return matvec_transpose(A, matvec(A, v)); }, tol,
        max_iter, est.iters_max, ok_max);
    // Inflate so L upper-bounds lambda_max even though the Rayleigh quotient
    // approaches it from below.
    est.L = lam_max * (1.0 + tol);

    bool ok_min = true;
    double lam_shift = 0.0;
    if (est.L > 0.0) {
        lam_shift = power_iteration(
            n,
            [&](const DenseVector& v) {
                DenseVector u = matvec_transpose(A, matvec(A, v));
                for (std::size_t i = 0; i < n; ++i) u[i] = est.L * v[i] - u[i];
                return u;
            },
            tol, max_iter, est.iters_min, ok_min);
    }
    est.mu = std::clamp(est.L - lam_shift, 0.0, est.L);

    if (!ok_max || !ok_min)
        throw SpectralError("estimate_spectral: power iteration did not converge", est);
    return est;
}

} // namespace condgrad
