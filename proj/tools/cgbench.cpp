// cgbench: generate sparse box-quadratic instances, run the conditional
// gradient solver family on them, and evaluate the complexity predictors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "condgrad/harness.hpp"
#include "condgrad/matrix_market.hpp"
#include "condgrad/version.hpp"

namespace {

using namespace condgrad;

int cmd_generate(std::size_t n, std::size_t s, double mu, std::uint64_t seed,
                 const std::string& out_path) {
    ProblemSpec spec;
    spec.n = n;
    spec.s = s;
    spec.mu_target = mu;
    spec.seed = seed;
    GeneratedProblem gen = generate_problem(spec);
    const std::string path = resolve_output_path(out_path);
    write_matrix_market_file(path, gen.A);
    std::cout << "wrote " << path << " (" << gen.A.n_rows() << "x" << gen.A.n_cols()
              << ", nnz=" << gen.A.nnz() << ", row_nnz_max=" << gen.A.row_nnz_max()
              << ", col_nnz_max=" << gen.A.col_nnz_max() << ")\n";
    return 0;
}

int cmd_solve(const RunConfig& cfg) {
    RunResult result = run_solve(cfg);
    const IterRecord& last = result.solution.trace.back();
    std::cout << to_string(cfg.solver) << ": status=" << to_string(result.solution.status)
              << " f=" << result.solution.f_value << " gap=" << last.fw_gap
              << " iters=" << result.solution.total_iterations
              << " lmo=" << last.lmo_count << " matvecs=" << last.matvec_count << "\n";
    return result.exit_code;
}

int cmd_scan(const ScanConfig& cfg, const std::string& out_path) {
    std::vector<ScanRow> rows = dimension_scan(cfg);
    if (out_path.empty()) {
        write_scan_csv(std::cout, rows);
    } else {
        const std::string path = resolve_output_path(out_path);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open scan output: " + path);
        write_scan_csv(out, rows);
        std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
    }
    return 0;
}

int cmd_predict(std::uint64_t n, double L, double mu, double D, double R0, double eps) {
    const PredictorReport r = make_predictor_report(n, L, mu, D, R0, eps);
    nlohmann::json j = {
        {"inputs", {{"n", r.n}, {"L", r.L}, {"mu", r.mu}, {"D", r.D}, {"R0", r.R0}, {"eps", r.eps}}},
        {"classic_fw_iters", r.classic_fw_iters},
        {"lmo_lower_bound", r.lmo_lower},
        {"scg_inner_per_restart", r.scg.inner_per_restart},
        {"scg_restarts_displayed", r.scg.restarts_displayed},
        {"scg_restarts_log", r.scg.restarts_log},
        {"scg_total_displayed", r.scg.displayed},
        {"scg_total_log", r.scg.log_variant},
    };
    std::cout << j.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conditional-gradient benchmark harness"};
    app.set_version_flag("--version", condgrad::kVersion);
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a doubly-sparse instance matrix");
    std::size_t g_n = 64, g_s = 4;
    double g_mu = 1.0;
    std::uint64_t g_seed = 1;
    std::string g_out = "matrix.mtx";
    gen->add_option("--n", g_n, "dimension");
    gen->add_option("--s", g_s, "per-row/column nonzero cap");
    gen->add_option("--mu", g_mu, "target strong-convexity scale of A");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out", g_out, "output Matrix Market path");

    // solve
    auto* solve = app.add_subcommand("solve", "run one solver on one instance");
    std::string s_config, s_matrix, s_solver, s_rule, s_x0, s_trace, s_summary;
    std::size_t s_n = 0, s_s = 4;
    double s_mu_target = 1.0, s_eps = -1.0, s_L = 0.0, s_mu = 0.0, s_kappa = 0.0;
    double s_lo = -1.0, s_hi = 1.0;
    std::uint64_t s_seed = 1, s_max_iters = 0, s_max_lmo = 0;
    bool s_have_seed = false;
    solve->add_option("--config", s_config, "JSON run config (flags override)");
    solve->add_option("--matrix", s_matrix, "Matrix Market input file");
    solve->add_option("--n", s_n, "generate: dimension");
    solve->add_option("--s", s_s, "generate: nonzero cap");
    solve->add_option("--mu-target", s_mu_target, "generate: strong-convexity scale");
    solve->add_option("--seed", s_seed, "generate: seed")->each([&](const std::string&) {
        s_have_seed = true;
    });
    solve->add_option("--domain-lo", s_lo, "feasible box lower bound");
    solve->add_option("--domain-hi", s_hi, "feasible box upper bound");
    solve->add_option("--solver", s_solver, "fw|scg|ms_fw|pg");
    solve->add_option("--rule", s_rule, "standard|exact");
    solve->add_option("--eps", s_eps, "accuracy / gap threshold");
    solve->add_option("--max-iters", s_max_iters, "iteration budget (0 = none)");
    solve->add_option("--max-lmo", s_max_lmo, "oracle-call budget (0 = none)");
    solve->add_option("--L", s_L, "Lipschitz constant override");
    solve->add_option("--strong-mu", s_mu, "strong-convexity constant override");
    solve->add_option("--kappa", s_kappa, "prox regularization (ms_fw; 0 = L)");
    solve->add_option("--x0", s_x0, "seeded|center|low_corner|high_corner");
    solve->add_option("--trace", s_trace, "trace CSV output path");
    solve->add_option("--summary", s_summary, "summary JSON output path");

    // scan
    auto* scan = app.add_subcommand("scan", "dimension scan over generated instances");
    std::vector<std::size_t> c_dims{16, 64, 256, 1024};
    condgrad::ScanConfig c_cfg;
    std::string c_out;
    scan->add_option("--dims", c_dims, "dimensions to scan");
    scan->add_option("--s", c_cfg.s, "nonzero cap");
    scan->add_option("--mu", c_cfg.mu_target, "strong-convexity scale");
    scan->add_option("--seed", c_cfg.seed, "base seed (per-n seed is base + n)");
    scan->add_option("--eps", c_cfg.eps, "target accuracy");
    scan->add_option("--fw-cap", c_cfg.fw_max_iters, "iteration cap for the classical arm");
    scan->add_option("--out", c_out, "output CSV path (stdout when omitted)");

    // predict
    auto* pred = app.add_subcommand("predict", "evaluate the iteration-complexity predictors");
    std::uint64_t p_n = 0;
    double p_L = 0, p_mu = 0, p_D = 0, p_R0 = 0, p_eps = 0;
    pred->add_option("--n", p_n, "dimension")->required();
    pred->add_option("--L", p_L, "Lipschitz constant")->required();
    pred->add_option("--mu", p_mu, "strong-convexity constant")->required();
    pred->add_option("--D", p_D, "feasible-set diameter")->required();
    pred->add_option("--R0", p_R0, "initial ball radius")->required();
    pred->add_option("--eps", p_eps, "target accuracy")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(g_n, g_s, g_mu, g_seed, g_out);
        if (solve->parsed()) {
            RunConfig cfg;
            if (!s_config.empty()) {
                std::ifstream in(s_config);
                if (!in) throw std::runtime_error("cannot open config: " + s_config);
                nlohmann::json j = nlohmann::json::parse(in);
                cfg = run_config_from_json(j);
            }
            if (!s_matrix.empty()) {
                cfg.matrix_path = s_matrix;
                cfg.problem.reset();
            }
            if (s_n > 0) {
                ProblemSpec spec;
                spec.n = s_n;
                spec.s = s_s;
                spec.mu_target = s_mu_target;
                spec.seed = s_seed;
                spec.domain = {s_lo, s_hi};
                cfg.problem = spec;
                cfg.matrix_path.reset();
            } else if (s_have_seed && cfg.problem) {
                cfg.problem->seed = s_seed;
            }
            if (cfg.matrix_path && solve->count("--domain-lo") + solve->count("--domain-hi") > 0)
                cfg.domain = {s_lo, s_hi};
            if (!s_solver.empty()) cfg.solver = parse_solver_kind(s_solver);
            if (!s_rule.empty()) cfg.rule = parse_step_rule(s_rule);
            if (s_eps >= 0.0) cfg.eps = s_eps;
            if (solve->count("--max-iters")) cfg.max_iters = s_max_iters;
            if (solve->count("--max-lmo")) cfg.max_lmo_calls = s_max_lmo;
            if (solve->count("--L")) cfg.lipschitz = s_L;
            if (solve->count("--strong-mu")) cfg.strong_mu = s_mu;
            if (solve->count("--kappa")) cfg.kappa = s_kappa;
            if (!s_x0.empty()) cfg.x0_mode = s_x0;
            if (!s_trace.empty()) cfg.trace_path = s_trace;
            if (!s_summary.empty()) cfg.summary_path = s_summary;
            return cmd_solve(cfg);
        }
        if (scan->parsed()) {
            c_cfg.dims = c_dims;
            return cmd_scan(c_cfg, c_out);
        }
        if (pred->parsed()) return cmd_predict(p_n, p_L, p_mu, p_D, p_R0, p_eps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
