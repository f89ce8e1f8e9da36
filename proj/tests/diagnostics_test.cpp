#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "condgrad/diagnostics.hpp"
#include "condgrad/rng.hpp"

using namespace condgrad;

namespace {

std::vector<IterRecord> synthetic_trace(std::size_t count,
                                        double (*gap_of_k)(std::size_t), double f_ref) {
    std::vector<IterRecord> t(count);
    for (std::size_t i = 0; i < count; ++i) {
        t[i].inner = i + 1;
        t[i].f_value = f_ref + gap_of_k(i + 1);
    }
    return t;
}

} // namespace

TEST_CASE("classic_iteration_bound") {
    CHECK(classic_iteration_bound(1.0, 2.0, 0.1) == 80);
    CHECK(classic_iteration_bound(1.0, 2.0, 4.0) == 2); // eps = L D^2
    CHECK(classic_iteration_bound(1.0, 4.0, 0.1) == 4 * classic_iteration_bound(1.0, 2.0, 0.1));
    CHECK_THROWS_AS((void)classic_iteration_bound(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)classic_iteration_bound(1.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("lmo_lower_bound") {
    CHECK(lmo_lower_bound(100, 1.0, 2.0, 0.1) == 9);  // ceil(min{50, 10}) - 1
    CHECK(lmo_lower_bound(10, 1.0, 2.0, 0.02) == 4);  // min{5, 50} -> 4
    CHECK(lmo_lower_bound(100, 1.0, 2.0, 1e9) == 0);  // floor at zero
    CHECK_THROWS_AS((void)lmo_lower_bound(0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("scg_iteration_bound: both published variants") {
    const ScgBound b = scg_iteration_bound(1.0, 1.0, 2.0, 1.0);
    CHECK(b.inner_per_restart == 8);
    CHECK(b.restarts_displayed == 4);
    CHECK(b.restarts_log == 2);
    CHECK(b.displayed == 32);
    CHECK(b.log_variant == 16);

    // eps >= mu R0^2 clamps the displayed restart count to one
    const ScgBound c = scg_iteration_bound(3.0, 1.0, 2.0, 10.0);
    CHECK(c.restarts_displayed == 1);
    CHECK(c.displayed == c.inner_per_restart);

    // halving eps adds exactly one restart to the log variant above threshold
    const ScgBound d1 = scg_iteration_bound(1.0, 1.0, 2.0, 0.5);
    const ScgBound d2 = scg_iteration_bound(1.0, 1.0, 2.0, 0.25);
    CHECK(d2.restarts_log == d1.restarts_log + 1);

    CHECK_THROWS_AS((void)scg_iteration_bound(1.0, 0.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)scg_iteration_bound(0.5, 1.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("predictors are monotone in their inputs") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const double L = 0.1 + 3.0 * rng.next_double();
        const double D = 0.1 + 3.0 * rng.next_double();
        const double eps = 1e-4 + rng.next_double();
        const std::uint64_t n = 2 + rng.next_below(1000);
        CHECK(classic_iteration_bound(L, D, eps) <= classic_iteration_bound(2 * L, D, eps));
        CHECK(classic_iteration_bound(L, D, eps) >= classic_iteration_bound(L, D, 2 * eps));
        CHECK(lmo_lower_bound(n, L, D, eps) <= lmo_lower_bound(2 * n, L, D, eps));
        CHECK(lmo_lower_bound(n, L, D, eps) >= lmo_lower_bound(n, L, D, 2 * eps));
        const double mu = L * (0.05 + 0.9 * rng.next_double());
        CHECK(scg_iteration_bound(L, mu, D, eps).log_variant <=
              scg_iteration_bound(L, mu, D, eps / 2).log_variant);
        CHECK(scg_iteration_bound(L, mu, D, eps).log_variant <=
              scg_iteration_bound(L, mu, 2 * D, eps).log_variant);
    }
}

TEST_CASE("lower bound never exceeds the classical upper envelope") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const double L = 0.1 + 3.0 * rng.next_double();
        const double D = 0.1 + 3.0 * rng.next_double();
        const double eps = 1e-5 + 0.1 * rng.next_double();
        const std::uint64_t n = 100 + rng.next_below(10000);
        CHECK(lmo_lower_bound(n, L, D, eps) <= classic_iteration_bound(L, D, eps));
    }
}

TEST_CASE("fit_rate: exact power law") {
    const auto t = synthetic_trace(60, [](std::size_t k) { return 10.0 / k; }, 3.0);
    CHECK(fit_rate(t, RateModel::Sublinear, 3.0) == doctest::Approx(-1.0).epsilon(0.01));
}

TEST_CASE("fit_rate: exact geometric sequence") {
    const auto t =
        synthetic_trace(40, [](std::size_t k) { return std::pow(0.5, double(k)); }, 0.0);
    CHECK(fit_rate(t, RateModel::Linear, 0.0) == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("fit_rate: skip preserves iteration indices") {
    auto t = synthetic_trace(60, [](std::size_t k) { return 10.0 / k; }, 0.0);
    for (std::size_t i = 0; i < 4; ++i) t[i].f_value = -1.0; // unusable early records
    CHECK(fit_rate(t, RateModel::Sublinear, 0.0, 4) == doctest::Approx(-1.0).epsilon(0.01));
}

TEST_CASE("fit_rate: insufficient data throws") {
    const auto t = synthetic_trace(9, [](std::size_t k) { return 1.0 / k; }, 0.0);
    CHECK_THROWS_AS((void)fit_rate(t, RateModel::Sublinear, 0.0), std::invalid_argument);
    const auto neg = synthetic_trace(20, [](std::size_t) { return -1.0; }, 0.0);
    CHECK_THROWS_AS((void)fit_rate(neg, RateModel::Sublinear, 0.0), std::invalid_argument);
}

TEST_CASE("make_predictor_report wires all fields") {
    const PredictorReport r = make_predictor_report(100, 1.0, 1.0, 2.0, 2.0, 0.1);
    CHECK(r.classic_fw_iters == 80);
    CHECK(r.lmo_lower == 9);
    CHECK(r.scg.inner_per_restart == 8);
    CHECK(r.n == 100);
    CHECK(r.eps == 0.1);
}
