#pragma once

#include <cstdint>
#include <span>

#include "condgrad/solvers.hpp"

namespace condgrad {

/// ceil(2 L D^2 / eps): iterations the classical conditional-gradient method
/// needs for f-accuracy eps, with the explicit constant of the standard
/// 2 L D^2 / (k+2) guarantee.
std::uint64_t classic_iteration_bound(double L, double D, double eps);

/// ceil(min{n/2, L D^2 / (4 eps)}) - 1, floored at 0: iterations below which
/// no method built on a plain linear minimization oracle can certify eps.
std::uint64_t lmo_lower_bound(std::uint64_t n, double L, double D, double eps);

/// Both published forms of the shrinking-conditional-gradient total:
/// the displayed product ceil(8L/mu) * ceil(max(mu R0^2/eps, 1)) and the
/// logarithmic variant ceil(8L/mu) * ceil(log2(max(mu R0^2/eps, 2))) that the
/// implemented restart schedule realizes. The two disagree in the source
/// material, so both are reported.
struct ScgBound {
    std::uint64_t inner_per_restart = 0;
    std::uint64_t restarts_displayed = 0;
    std::uint64_t restarts_log = 0;
    std::uint64_t displayed = 0;
    std::uint64_t log_variant = 0;
};
ScgBound scg_iteration_bound(double L, double mu, double R0, double eps);

enum class RateModel { Sublinear, Linear };

/// Least-squares convergence-rate fit of the f-gap sequence against a
/// reference value. Sublinear returns the slope of log(gap) vs log(k)
/// (about -1 for the classical method in its zigzag regime); Linear returns
/// the per-iteration contraction factor. Records are indexed 1-based by their
/// position in `trace`; the first `skip` records are excluded from the fit
/// but keep their indices. Requires at least 10 usable records with positive
/// gaps.
double fit_rate(std::span<const IterRecord> trace, RateModel model, double f_ref,
                std::size_t skip = 0);

struct PredictorReport {
    std::uint64_t n = 0;
    double L = 0.0;
    double mu = 0.0;
    double D = 0.0;
    double R0 = 0.0;
    double eps = 0.0;
    std::uint64_t classic_fw_iters = 0;
    std::uint64_t lmo_lower = 0;
    ScgBound scg;
};

PredictorReport make_predictor_report(std::uint64_t n, double L, double mu, double D,
                                      double R0, double eps);

} // namespace condgrad
