// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and instance families are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "condgrad/diagnostics.hpp"
#include "condgrad/harness.hpp"
#include "condgrad/rng.hpp"
#include "condgrad/solvers.hpp"
#include "oracles.hpp"

using namespace condgrad;

namespace {

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

double reference_optimum(const QuadraticForm& q, const AxisBox& X, const DenseVector& x0,
                         double L) {
    const Solution ref = projected_gradient(q, X, x0, L, StopCriterion{1e-12, 5000000, 0});
    require(ref.status == SolveStatus::Converged, "projected-gradient reference did not settle");
    return ref.f_value;
}

// --- criterion 1 -----------------------------------------------------------

std::string criterion_1() {
    SplitMix64 rng(101);
    const double t0 = now_seconds();
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.next_below(12);
        DenseVector lo(n), hi(n), p(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double a = 4.0 * rng.next_double() - 2.0;
            const double b = 4.0 * rng.next_double() - 2.0;
            lo[i] = std::min(a, b);
            hi[i] = std::max(a, b);
            p[i] = 2.0 * rng.next_double() - 1.0;
        }
        if (trial % 7 == 0) p[rng.next_below(n)] = 0.0;
        const AxisBox box(lo, hi);
        const DenseVector v = lmo_box(box, p);
        require(dot(p, v) == oracle::brute_force_box_min(box, p),
                "oracle value differs from vertex enumeration");
        require(contains(box, v, 0.0), "oracle output left the box");
    }
    const double dt = now_seconds() - t0;
    require(dt < 5.0, "enumeration check exceeded 5 s");
    return "1000 pairs exact, " + fmt(dt) + " s";
}

// --- criterion 2 -----------------------------------------------------------

AxisBox mixed_box(std::size_t n) {
    DenseVector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = i % 2 == 0 ? 0.25 : -1.0; // half the axes pinned away from the pull to 0
        hi[i] = i % 2 == 0 ? 2.25 : 1.0;
    }
    return AxisBox(std::move(lo), std::move(hi));
}

std::string criterion_2() {
    const std::size_t n = 50;
    const double eps = 1e-3;
    double worst_slope = -1e9, best_slope = 1e9, min_margin = 1e300;
    for (std::uint64_t seed = 1000; seed < 1020; ++seed) {
        const QuadraticForm q(generate_problem({n, 4, 1.0, seed, {}}).A);
        const AxisBox box = mixed_box(n);
        const DenseVector x0 = initial_point(box, seed);
        const SpectralEstimate est = estimate_spectral(q);
        DenseVector span(n);
        for (std::size_t i = 0; i < n; ++i) span[i] = box.hi[i] - box.lo[i];
        const double D2 = norm2(span); // euclidean diameter pairs with the 2-norm L
        const std::uint64_t bound = classic_iteration_bound(est.L, D2, eps);

        const Solution sol = frank_wolfe(q, box, x0, StepRule::ExactLineSearch,
                                         StopCriterion{eps, bound, 0});
        require(sol.status == SolveStatus::Converged, "run exhausted the envelope budget");
        require(sol.total_iterations <= bound, "iterations exceeded the classical bound");
        min_margin = std::min(min_margin,
                              double(bound) / double(std::max<std::uint64_t>(sol.total_iterations, 1)));

        const double fstar = reference_optimum(q, box, x0, est.L);
        const double slope = fit_rate(sol.trace, RateModel::Sublinear, fstar, 1);
        worst_slope = std::max(worst_slope, slope);
        best_slope = std::min(best_slope, slope);
        require(slope >= -1.6 && slope <= -0.8,
                "sublinear fit slope " + fmt(slope) + " outside [-1.6, -0.8]");
    }
    return "slopes [" + fmt(best_slope) + ", " + fmt(worst_slope) + "], envelope margin >= " +
           fmt(min_margin) + "x";
}

// --- criterion 3 -----------------------------------------------------------

std::string criterion_3() {
    const std::size_t n = 64;
    const double eps = 1e-8;
    double worst_ratio = 0.0;
    std::size_t min_ratios = SIZE_MAX;
    for (std::uint64_t seed = 2000; seed < 2020; ++seed) {
        const QuadraticForm q(generate_problem({n, 4, 1.0, seed, {}}).A);
        const AxisBox box = AxisBox::unit(n);
        const DenseVector x0 = initial_point(box, seed);
        const SpectralEstimate est = estimate_spectral(q);
        require(est.L / est.mu <= 10.0, "instance conditioning exceeded 10");
        const double fstar = reference_optimum(q, box, x0, est.L);

        const Solution sol = shrinking_cg(q, box, x0, est.L, est.mu, eps);
        const std::uint64_t budget =
            scg_iteration_bound(est.L, est.mu, box_diameter(box), eps).log_variant;
        require(sol.total_iterations <= budget,
                "total inner iterations exceeded the logarithmic bound");

        std::vector<double> errs; // f(p_t) - f* at each restart boundary
        for (std::size_t i = 0; i < sol.trace.size(); ++i) {
            const IterRecord& r = sol.trace[i];
            const bool last_of_restart =
                i + 1 == sol.trace.size() || sol.trace[i + 1].outer != r.outer;
            if (r.outer >= 1 && last_of_restart) errs.push_back(r.f_value - fstar);
        }
        std::size_t ratios = 0;
        for (std::size_t t = 1; t < errs.size(); ++t) {
            if (errs[t - 1] <= 1e-10) continue; // below reference resolution
            const double ratio = errs[t] / errs[t - 1];
            worst_ratio = std::max(worst_ratio, ratio);
            ++ratios;
            require(ratio <= 0.75, "per-restart ratio " + fmt(ratio) + " above 0.75");
        }
        min_ratios = std::min(min_ratios, ratios);
        require(ratios >= 5, "too few measurable restarts");
    }
    return "worst per-restart ratio " + fmt(worst_ratio) + ", >= " +
           std::to_string(min_ratios) + " ratios per instance, totals within bound";
}

// --- criterion 4 -----------------------------------------------------------

std::string criterion_4() {
    const double t0 = now_seconds();
    ScanConfig cfg;
    cfg.dims = {16, 64, 256, 1024};
    cfg.s = 4;
    cfg.mu_target = 1.0;
    cfg.seed = 4000;
    cfg.eps = 1e-6;
    cfg.fw_max_iters = 100000;
    const std::vector<ScanRow> rows = dimension_scan(cfg);

    std::uint64_t lo = UINT64_MAX, hi = 0;
    for (const ScanRow& r : rows) {
        if (r.solver != "scg") continue;
        lo = std::min(lo, r.iters);
        hi = std::max(hi, r.iters);
        require(r.iters <= r.scg_bound_log, "scan row exceeded the predictor bound");
    }
    const double dt = now_seconds() - t0;
    require(hi <= 2 * lo, "shrinking-CG totals varied by more than x2 across n (" +
                              std::to_string(lo) + ".." + std::to_string(hi) + ")");
    require(dt < 120.0, "scan exceeded 2 minutes");
    return "scg totals in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] over n in {16..1024}, " +
           fmt(dt) + " s";
}

// --- criterion 5 -----------------------------------------------------------

std::string criterion_5() {
    double worst = 0.0;
    for (std::uint64_t seed = 5000; seed < 5003; ++seed) {
        const QuadraticForm q(generate_problem({128, 4, 1.0, seed, {}}).A);
        const AxisBox box = AxisBox::unit(128);
        GradientState state(q, initial_point(box, seed));
        SplitMix64 rng(seed * 31 + 7);
        for (int k = 0; k < 1000; ++k) {
            DenseVector x(128);
            for (double& v : x) v = 2.0 * rng.next_double() - 1.0;
            state.step(q, x, rng.next_double());
        }
        const DenseVector fresh = q.gradient(state.y());
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            num += (state.g()[i] - fresh[i]) * (state.g()[i] - fresh[i]);
            den += fresh[i] * fresh[i];
        }
        const double rel = std::sqrt(num / den);
        worst = std::max(worst, rel);
        require(rel <= 1e-9, "cached gradient drift " + fmt(rel) + " above 1e-9");
    }
    return "worst relative drift " + fmt(worst) + " after 1000 blended steps";
}

// --- criterion 6 -----------------------------------------------------------

QuadraticForm wide_spectrum_instance(std::size_t n) {
    // log-spaced diagonal plus a weak superdiagonal: doubly sparse with s = 2,
    // condition number of A^T A around 1e3 so acceleration dominates the window
    std::vector<Triplet> ts;
    const double lo = 0.03, hi = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d =
            lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / double(n - 1));
        ts.push_back({i, i, d});
        if (i + 1 < n) ts.push_back({i, i + 1, 0.01 * d});
    }
    return QuadraticForm(CsrMatrix::from_triplets(ts, n, n));
}

std::string criterion_6() {
    const std::size_t n = 32;
    const QuadraticForm q = wide_spectrum_instance(n);
    const AxisBox box(DenseVector(n, -5.0), DenseVector(n, 5.0)); // prox minimizers interior
    const DenseVector x0(n, 0.5);
    const SpectralEstimate est = estimate_spectral(q);
    const double kappa = est.L;

    const Solution sol = monteiro_svaiter(q, box, x0, kappa, StopCriterion{-1.0, 50, 0});
    require(sol.status == SolveStatus::IterLimit, "expected the full 50 outer steps");
    require(sol.ms_certificates.size() == 50, "missing acceptance certificates");
    for (const MsCertificate& c : sol.ms_certificates) {
        const ProxObjective F{q, kappa, c.anchor};
        const DenseVector g = F.gradient(c.y);
        DenseVector d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = c.y[i] - c.anchor[i];
        require(norm2(g) <= 0.5 * kappa * norm2(d) * (1.0 + 1e-9) + 1e-12,
                "acceptance inequality violated at an accepted step");
    }

    const double fstar = reference_optimum(q, box, x0, est.L);
    const double slope = fit_rate(sol.trace, RateModel::Sublinear, fstar, 5);
    require(slope >= -4.0 && slope <= -1.0,
            "outer gap fit slope " + fmt(slope) + " outside the 1/k^2 factor-2 window");
    return "all 50 certificates hold, gap fit slope " + fmt(slope) + " over k in [5,50]";
}

// --- criterion 7 -----------------------------------------------------------

std::string criterion_7() {
    std::uint64_t pairs = 0;
    for (const StepRule rule : {StepRule::ExactLineSearch, StepRule::Standard}) {
        const QuadraticForm q(generate_problem({64, 4, 1.0, 7000, {}}).A);
        const AxisBox box = AxisBox::unit(64);
        ScgOptions opts;
        opts.stop_on_gap = false;
        const Solution sol = shrinking_cg(q, box, initial_point(box, 7000), 2.25, 0.25,
                                          1e-4, rule, opts);
        for (std::size_t i = 1; i < sol.trace.size(); ++i) {
            const IterRecord& prev = sol.trace[i - 1];
            const IterRecord& cur = sol.trace[i];
            if (cur.outer != prev.outer || cur.inner != prev.inner + 1 || cur.inner == 0)
                continue;
            require(cur.matvec_count - prev.matvec_count == 2,
                    "inner iteration consumed " +
                        std::to_string(cur.matvec_count - prev.matvec_count) +
                        " matvecs instead of 2");
            require(cur.lmo_count - prev.lmo_count == 1,
                    "inner iteration consumed more than one oracle call");
            ++pairs;
        }
    }
    require(pairs >= 200, "too few inner-iteration pairs observed");
    return std::to_string(pairs) + " inner iterations, each exactly one A and one A^T apply";
}

// --- criterion 8 -----------------------------------------------------------

std::string strip_last_column(const std::string& text) {
    std::istringstream in(text);
    std::string out, line;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(','));
        out += '\n';
    }
    return out;
}

std::string criterion_8() {
    namespace fs = std::filesystem;
    const fs::path t1 = fs::temp_directory_path() / "condgrad_accept_det1.csv";
    const fs::path t2 = fs::temp_directory_path() / "condgrad_accept_det2.csv";
    for (const auto& p : {t1, t2}) {
        RunConfig cfg;
        cfg.problem = ProblemSpec{64, 4, 1.0, 8000, {}};
        cfg.solver = SolverKind::Scg;
        cfg.eps = 1e-7;
        cfg.trace_path = p.string();
        (void)run_solve(cfg);
    }
    std::ifstream f1(t1), f2(t2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    fs::remove(t1);
    fs::remove(t2);
    require(strip_last_column(s1.str()) == strip_last_column(s2.str()),
            "traces differ outside the elapsed_ns column");
    return "byte-identical traces modulo elapsed_ns";
}

// --- criterion 9 -----------------------------------------------------------

std::string criterion_9() {
    require(lmo_lower_bound(100, 1.0, 2.0, 0.1) == 9, "case n=100 mismatch");
    require(lmo_lower_bound(10, 1.0, 2.0, 0.02) == 4, "case n=10 mismatch");
    require(lmo_lower_bound(100, 1.0, 2.0, 1e9) == 0, "huge-eps case mismatch");
    return "hand-evaluated values reproduced exactly";
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string()> body;
    };
    const std::vector<Criterion> criteria = {
        {"1 oracle equivalence vs vertex enumeration", criterion_1},
        {"2 classical envelope and sublinear slope", criterion_2},
        {"3 shrinking-CG geometric restart decrease", criterion_3},
        {"4 dimension-independent scan totals", criterion_4},
        {"5 incremental gradient recurrence drift", criterion_5},
        {"6 accelerated outer loop certificates and rate", criterion_6},
        {"7 two matvecs per inner iteration", criterion_7},
        {"8 byte-stable traces", criterion_8},
        {"9 oracle-complexity lower-bound formula", criterion_9},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const double t0 = now_seconds();
        try {
            const std::string detail = c.body();
            std::printf("[PASS] criterion %s: %s (%.2fs)\n", c.name, detail.c_str(),
                        now_seconds() - t0);
        } catch (const Failure& f) {
            std::printf("[FAIL] criterion %s: %s\n", c.name, f.what.c_str());
            ++failures;
        } catch (const std::exception& e) {
            std::printf("[FAIL] criterion %s: unexpected error: %s\n", c.name, e.what());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
