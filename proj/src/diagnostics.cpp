#include "condgrad/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace condgrad {

namespace {

std::uint64_t to_count(double x) {
    if (x <= 0.0) return 0;
    if (x >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::ceil(x));
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

} // namespace

std::uint64_t classic_iteration_bound(double L, double D, double eps) {
    require_positive(L, "L");
    require_positive(D, "D");
    require_positive(eps, "eps");
    return to_count(2.0 * L * D * D / eps);
}

std::uint64_t lmo_lower_bound(std::uint64_t n, double L, double D, double eps) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    require_positive(L, "L");
    require_positive(D, "D");
    require_positive(eps, "eps");
    const double m = std::min(static_cast<double>(n) / 2.0, L * D * D / (4.0 * eps));
    const std::uint64_t c = to_count(m);
    return c > 0 ? c - 1 : 0;
}

ScgBound scg_iteration_bound(double L, double mu, double R0, double eps) {
    require_positive(mu, "mu");
    require_positive(R0, "R0");
    require_positive(eps, "eps");
    if (!(L >= mu)) throw std::invalid_argument("need L >= mu");
    ScgBound b;
    b.inner_per_restart = to_count(8.0 * L / mu);
    const double ratio = mu * R0 * R0 / eps;
    b.restarts_displayed = to_count(std::max(ratio, 1.0));
    b.restarts_log = to_count(std::log2(std::max(ratio, 2.0)));
    b.displayed = b.inner_per_restart * b.restarts_displayed;
    b.log_variant = b.inner_per_restart * b.restarts_log;
    return b;
}

double fit_rate(std::span<const IterRecord> trace, RateModel model, double f_ref,
                std::size_t skip) {
    std::vector<double> xs, zs;
    for (std::size_t i = skip; i < trace.size(); ++i) {
        const double gap = trace[i].f_value - f_ref;
        if (gap <= 0.0) continue;
        const double k = static_cast<double>(i + 1);
        xs.push_back(model == RateModel::Sublinear ? std::log(k) : k);
        zs.push_back(std::log(gap));
    }
    if (xs.size() < 10)
        throw std::invalid_argument("fit_rate: need at least 10 records with positive gaps");

    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sz = 0.0, sxx = 0.0, sxz = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sz += zs[i];
        sxx += xs[i] * xs[i];
        sxz += xs[i] * zs[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_rate: degenerate abscissa");
    const double slope = (n * sxz - sx * sz) / denom;
    return model == RateModel::Sublinear ? slope : std::exp(slope);
}

PredictorReport make_predictor_report(std::uint64_t n, double L, double mu, double D,
                                      double R0, double eps) {
    PredictorReport r;
    r.n = n;
    r.L = L;
    r.mu = mu;
    r.D = D;
    r.R0 = R0;
    r.eps = eps;
    r.classic_fw_iters = classic_iteration_bound(L, D, eps);
    r.lmo_lower = lmo_lower_bound(n, L, D, eps);
    r.scg = scg_iteration_bound(L, mu, R0, eps);
    return r;
}

} // namespace condgrad
