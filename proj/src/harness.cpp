#include "condgrad/harness.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "condgrad/matrix_market.hpp"
#include "condgrad/version.hpp"

namespace condgrad {

std::string to_string(SolverKind k) {
    switch (k) {
        case SolverKind::FrankWolfe: return "fw";
        case SolverKind::Scg: return "scg";
        case SolverKind::MsFw: return "ms_fw";
        case SolverKind::Pg: return "pg";
    }
    return "?";
}

std::string to_string(StepRule r) {
    return r == StepRule::Standard ? "standard" : "exact";
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::IterLimit: return "iter_limit";
        case SolveStatus::ConditionUnreachable: return "condition_unreachable";
    }
    return "?";
}

SolverKind parse_solver_kind(const std::string& s) {
    if (s == "fw") return SolverKind::FrankWolfe;
    if (s == "scg") return SolverKind::Scg;
    if (s == "ms_fw") return SolverKind::MsFw;
    if (s == "pg") return SolverKind::Pg;
    throw std::invalid_argument("unknown solver: " + s + " (expected fw|scg|ms_fw|pg)");
}

StepRule parse_step_rule(const std::string& s) {
    if (s == "standard") return StepRule::Standard;
    if (s == "exact") return StepRule::ExactLineSearch;
    throw std::invalid_argument("unknown step rule: " + s + " (expected standard|exact)");
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    RunConfig cfg;
    if (j.contains("problem")) {
        const auto& p = j.at("problem");
        ProblemSpec spec;
        spec.n = p.at("n").get<std::size_t>();
        spec.s = p.at("s").get<std::size_t>();
        spec.mu_target = p.value("mu_target", 1.0);
        spec.seed = p.value("seed", std::uint64_t{0});
        if (p.contains("domain")) {
            spec.domain.lo = p.at("domain").value("lo", -1.0);
            spec.domain.hi = p.at("domain").value("hi", 1.0);
        }
        cfg.problem = spec;
    }
    if (j.contains("matrix")) cfg.matrix_path = j.at("matrix").get<std::string>();
    if (j.contains("domain") && !cfg.problem) {
        cfg.domain.lo = j.at("domain").value("lo", -1.0);
        cfg.domain.hi = j.at("domain").value("hi", 1.0);
    }
    if (j.contains("solver")) cfg.solver = parse_solver_kind(j.at("solver").get<std::string>());
    if (j.contains("rule")) cfg.rule = parse_step_rule(j.at("rule").get<std::string>());
    cfg.eps = j.value("eps", 1e-6);
    cfg.max_iters = j.value("max_iters", std::uint64_t{0});
    cfg.max_lmo_calls = j.value("max_lmo_calls", std::uint64_t{0});
    if (j.contains("L")) cfg.lipschitz = j.at("L").get<double>();
    if (j.contains("mu")) cfg.strong_mu = j.at("mu").get<double>();
    cfg.kappa = j.value("kappa", 0.0);
    cfg.x0_mode = j.value("x0", std::string("seeded"));
    if (j.contains("x0_seed")) cfg.x0_seed = j.at("x0_seed").get<std::uint64_t>();
    if (j.contains("trace")) cfg.trace_path = j.at("trace").get<std::string>();
    if (j.contains("summary")) cfg.summary_path = j.at("summary").get<std::string>();
    return cfg;
}

std::string resolve_output_path(const std::string& path) {
    const char* dir = std::getenv("CGBENCH_OUTPUT_DIR");
    if (!dir || *dir == '\0') return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

void write_trace_csv(std::ostream& out, std::span<const IterRecord> trace) {
    out << kTraceCsvHeader << '\n';
    char buf[256];
    for (const IterRecord& r : trace) {
        std::snprintf(buf, sizeof(buf),
                      "%" PRIu64 ",%" PRIu64 ",%.17g,%.17g,%.17g,%.17g,%" PRIu64
                      ",%" PRIu64 ",%" PRId64,
                      r.outer, r.inner, r.f_value, r.fw_gap, r.gamma, r.radius,
                      r.lmo_count, r.matvec_count, r.elapsed_ns);
        out << buf << '\n';
    }
}

namespace {

DenseVector make_x0(const RunConfig& cfg, const AxisBox& box, std::uint64_t seed) {
    if (cfg.x0_mode == "seeded") return initial_point(box, cfg.x0_seed.value_or(seed));
    if (cfg.x0_mode == "center") {
        DenseVector x(box.dim());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.5 * (box.lo[i] + box.hi[i]);
        return x;
    }
    if (cfg.x0_mode == "low_corner") return box.lo;
    if (cfg.x0_mode == "high_corner") return box.hi;
    throw std::invalid_argument("unknown x0 mode: " + cfg.x0_mode);
}

nlohmann::json predictors_json(const PredictorReport& p) {
    return {
        {"inputs",
         {{"n", p.n}, {"L", p.L}, {"mu", p.mu}, {"D", p.D}, {"R0", p.R0}, {"eps", p.eps}}},
        {"classic_fw_iters", p.classic_fw_iters},
        {"lmo_lower_bound", p.lmo_lower},
        {"scg_inner_per_restart", p.scg.inner_per_restart},
        {"scg_restarts_displayed", p.scg.restarts_displayed},
        {"scg_restarts_log", p.scg.restarts_log},
        {"scg_total_displayed", p.scg.displayed},
        {"scg_total_log", p.scg.log_variant},
    };
}

} // namespace

nlohmann::json summary_json(const RunConfig& cfg, const RunResult& result) {
    nlohmann::json j;
    j["version"] = kVersion;
    if (cfg.problem) {
        const ProblemSpec& p = *cfg.problem;
        j["problem"] = {{"n", p.n},
                        {"s", p.s},
                        {"mu_target", p.mu_target},
                        {"seed", p.seed},
                        {"domain", {{"lo", p.domain.lo}, {"hi", p.domain.hi}}}};
    } else if (cfg.matrix_path) {
        j["problem"] = {{"matrix", *cfg.matrix_path},
                        {"domain", {{"lo", cfg.domain.lo}, {"hi", cfg.domain.hi}}}};
    }
    j["solver"] = to_string(cfg.solver);
    j["rule"] = to_string(cfg.rule);
    j["eps"] = cfg.eps;
    j["status"] = to_string(result.solution.status);
    j["f_value"] = result.solution.f_value;
    const IterRecord& last = result.solution.trace.back();
    j["final_gap"] = last.fw_gap;
    j["constants"] = {{"L", result.L}, {"mu", result.mu}};
    j["totals"] = {{"iterations", result.solution.total_iterations},
                   {"lmo_calls", last.lmo_count},
                   {"matvecs", last.matvec_count},
                   {"wall_ns", last.elapsed_ns}};
    j["predictors"] = predictors_json(result.predictors);
    return j;
}

RunResult run_solve(const RunConfig& cfg) {
    CsrMatrix A;
    AxisBox box({}, {});
    std::uint64_t seed = 0;
    if (cfg.problem) {
        GeneratedProblem gen = generate_problem(*cfg.problem);
        A = std::move(gen.A);
        box = std::move(gen.domain);
        seed = cfg.problem->seed;
    } else if (cfg.matrix_path) {
        A = read_matrix_market_file(*cfg.matrix_path);
        if (!(cfg.domain.lo < cfg.domain.hi))
            throw std::invalid_argument("run: degenerate domain");
        box = AxisBox(DenseVector(A.n_cols(), cfg.domain.lo),
                      DenseVector(A.n_cols(), cfg.domain.hi));
    } else {
        throw std::invalid_argument("run: config needs either a problem spec or a matrix file");
    }

    QuadraticForm q(std::move(A));
    DenseVector x0 = make_x0(cfg, box, seed);

    double L, mu;
    if (cfg.lipschitz && cfg.strong_mu) {
        L = *cfg.lipschitz;
        mu = *cfg.strong_mu;
    } else {
        const SpectralEstimate est = estimate_spectral(q);
        L = cfg.lipschitz.value_or(est.L);
        mu = cfg.strong_mu.value_or(est.mu);
    }

    RunResult result;
    result.L = L;
    result.mu = mu;
    const double D = box_diameter(box);
    result.predictors.n = q.n();
    result.predictors.L = L;
    result.predictors.mu = mu;
    result.predictors.D = D;
    result.predictors.R0 = D;
    result.predictors.eps = cfg.eps;
    result.predictors.classic_fw_iters = classic_iteration_bound(L, D, cfg.eps);
    result.predictors.lmo_lower = lmo_lower_bound(q.n(), L, D, cfg.eps);
    if (mu > 0.0 && L >= mu)
        result.predictors.scg = scg_iteration_bound(L, mu, D, cfg.eps);

    switch (cfg.solver) {
        case SolverKind::FrankWolfe: {
            StopCriterion stop{cfg.eps, cfg.max_iters, cfg.max_lmo_calls};
            result.solution = frank_wolfe(q, box, std::move(x0), cfg.rule, stop);
            break;
        }
        case SolverKind::Scg: {
            if (!(mu > 0.0))
                throw std::invalid_argument("run: shrinking CG needs mu > 0");
            ScgOptions opts;
            opts.max_total_inner = cfg.max_iters;
            opts.max_lmo_calls = cfg.max_lmo_calls;
            result.solution =
                shrinking_cg(q, box, std::move(x0), L, mu, cfg.eps, cfg.rule, opts);
            break;
        }
        case SolverKind::MsFw: {
            const double kappa = cfg.kappa > 0.0 ? cfg.kappa : L;
            StopCriterion stop{cfg.eps, cfg.max_iters, cfg.max_lmo_calls};
            MsOptions opts;
            opts.inner_rule = cfg.rule;
            result.solution = monteiro_svaiter(q, box, std::move(x0), kappa, stop, opts);
            break;
        }
        case SolverKind::Pg: {
            StopCriterion stop{cfg.eps, cfg.max_iters, cfg.max_lmo_calls};
            result.solution = projected_gradient(q, box, std::move(x0), L, stop);
            break;
        }
    }

    if (cfg.trace_path) {
        const std::string path = resolve_output_path(*cfg.trace_path);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open trace output: " + path);
        write_trace_csv(out, result.solution.trace);
        if (!out) throw std::runtime_error("trace write failed: " + path);
    }
    if (cfg.summary_path) {
        const std::string path = resolve_output_path(*cfg.summary_path);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open summary output: " + path);
        out << summary_json(cfg, result).dump(2) << '\n';
        if (!out) throw std::runtime_error("summary write failed: " + path);
    }

    switch (result.solution.status) {
        case SolveStatus::Converged: result.exit_code = 0; break;
        case SolveStatus::IterLimit: result.exit_code = 2; break;
        case SolveStatus::ConditionUnreachable: result.exit_code = 3; break;
    }
    return result;
}

CertifiedConstants certified_spectral_bounds(double mu_target) {
    return {2.25 * mu_target * mu_target, 0.2 * mu_target * mu_target};
}

std::vector<ScanRow> dimension_scan(const ScanConfig& cfg) {
    if (cfg.dims.empty()) throw std::invalid_argument("dimension_scan: dims must be non-empty");
    std::vector<ScanRow> rows;
    for (const std::size_t n : cfg.dims) {
        ProblemSpec spec;
        spec.n = n;
        spec.s = std::min(cfg.s, n);
        spec.mu_target = cfg.mu_target;
        spec.seed = cfg.seed + n;
        GeneratedProblem gen = generate_problem(spec);
        QuadraticForm q(std::move(gen.A));
        const AxisBox& box = gen.domain;
        const CertifiedConstants cert = certified_spectral_bounds(cfg.mu_target);
        const double D = box_diameter(box);
        const std::uint64_t classic = classic_iteration_bound(cert.L, D, cfg.eps);
        const std::uint64_t lower = lmo_lower_bound(n, cert.L, D, cfg.eps);
        const ScgBound scg_b = scg_iteration_bound(cert.L, cert.mu, D, cfg.eps);

        ScgOptions scg_opts;
        scg_opts.stop_on_gap = false; // measure the full certified schedule
        Solution scg_sol = shrinking_cg(q, box, initial_point(box, spec.seed), cert.L,
                                        cert.mu, cfg.eps, StepRule::ExactLineSearch, scg_opts);
        const IterRecord& sl = scg_sol.trace.back();
        rows.push_back({n, "scg", scg_sol.total_iterations, sl.lmo_count, sl.matvec_count,
                        sl.elapsed_ns, classic, lower, scg_b.displayed, scg_b.log_variant});

        StopCriterion fw_stop{cfg.eps, cfg.fw_max_iters, 0};
        Solution fw_sol = frank_wolfe(q, box, initial_point(box, spec.seed),
                                      StepRule::ExactLineSearch, fw_stop);
        const IterRecord& fl = fw_sol.trace.back();
        rows.push_back({n, "fw", fw_sol.total_iterations, fl.lmo_count, fl.matvec_count,
                        fl.elapsed_ns, classic, lower, scg_b.displayed, scg_b.log_variant});
    }
    return rows;
}

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
    out << kScanCsvHeader << '\n';
    for (const ScanRow& r : rows) {
        out << r.n << ',' << r.solver << ',' << r.iters << ',' << r.lmo_calls << ','
            << r.matvecs << ',' << r.wall_ns << ',' << r.classic_bound << ','
            << r.lmo_lower_bound << ',' << r.scg_bound_displayed << ','
            << r.scg_bound_log << '\n';
    }
}

} // namespace condgrad
