#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "condgrad/diagnostics.hpp"
#include "condgrad/problem_gen.hpp"
#include "condgrad/solvers.hpp"

namespace condgrad {

enum class SolverKind { FrankWolfe, Scg, MsFw, Pg };

std::string to_string(SolverKind k);
std::string to_string(StepRule r);
std::string to_string(SolveStatus s);
SolverKind parse_solver_kind(const std::string& s);
StepRule parse_step_rule(const std::string& s);

/// One benchmark run: a generated or file-backed problem, a solver choice,
/// stopping parameters, and output artifact paths.
struct RunConfig {
    std::optional<ProblemSpec> problem;
    std::optional<std::string> matrix_path; ///< Matrix Market file instead of a generator spec
    BoxSpec domain;                         ///< feasible box for file-backed problems
    SolverKind solver = SolverKind::Scg;
    StepRule rule = StepRule::ExactLineSearch;
    double eps = 1e-6;
    std::uint64_t max_iters = 0;
    std::uint64_t max_lmo_calls = 0;
    std::optional<double> lipschitz; ///< L override; otherwise estimated
    std::optional<double> strong_mu; ///< mu override; otherwise estimated
    double kappa = 0.0;              ///< accelerated method; 0 picks kappa = L
    std::string x0_mode = "seeded";  ///< seeded | center | low_corner | high_corner
    std::optional<std::uint64_t> x0_seed; ///< defaults to the problem seed
    std::optional<std::string> trace_path;
    std::optional<std::string> summary_path;
};

RunConfig run_config_from_json(const nlohmann::json& j);

struct RunResult {
    Solution solution;
    PredictorReport predictors;
    double L = 0.0;
    double mu = 0.0;
    int exit_code = 0; ///< 0 converged, 2 budget exhausted, 3 condition unreachable
};

/// Executes the configured solver and writes the trace CSV / summary JSON
/// artifacts. Throws on validation and I/O failures (the CLI maps those to
/// exit code 1).
RunResult run_solve(const RunConfig& cfg);

/// Exact column set of the trace artifact; two runs of the same config are
/// byte-identical except for the elapsed_ns column.
inline constexpr const char* kTraceCsvHeader =
    "outer,inner,f_value,fw_gap,gamma,radius,lmo_count,matvec_count,elapsed_ns";

void write_trace_csv(std::ostream& out, std::span<const IterRecord> trace);

nlohmann::json summary_json(const RunConfig& cfg, const RunResult& result);

/// Prepends $CGBENCH_OUTPUT_DIR to relative artifact paths when it is set.
std::string resolve_output_path(const std::string& path);

struct ScanConfig {
    std::vector<std::size_t> dims;
    std::size_t s = 4;
    double mu_target = 1.0;
    std::uint64_t seed = 1;
    double eps = 1e-6;
    std::uint64_t fw_max_iters = 100000; ///< budget cap for the classical arm
};

struct ScanRow {
    std::size_t n = 0;
    std::string solver;
    std::uint64_t iters = 0;
    std::uint64_t lmo_calls = 0;
    std::uint64_t matvecs = 0;
    std::int64_t wall_ns = 0;
    std::uint64_t classic_bound = 0;
    std::uint64_t lmo_lower_bound = 0;
    std::uint64_t scg_bound_displayed = 0;
    std::uint64_t scg_bound_log = 0;
};

/// For each dimension: generate an instance (fixed s and mu_target, per-n
/// seed), then run the shrinking method over its full certified restart
/// schedule and the classical method to the gap target, recording totals and
/// the predictor values. The shrinking arm uses the generator-certified
/// (L, mu) bounds so the schedule is identical across dimensions.
std::vector<ScanRow> dimension_scan(const ScanConfig& cfg);

inline constexpr const char* kScanCsvHeader =
    "n,solver,iters,lmo_calls,matvecs,wall_ns,classic_bound,lmo_lower_bound,"
    "scg_bound_displayed,scg_bound_log";

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);

/// Certified spectral bounds for matrices from generate_problem:
/// sigma(A) in [0.5, 1.5] * mu_target gives lambda(A^T A) within
/// [0.25, 2.25] * mu_target^2; mu uses an extra margin below the floor.
struct CertifiedConstants {
    double L = 0.0;
    double mu = 0.0;
};
CertifiedConstants certified_spectral_bounds(double mu_target);

} // namespace condgrad
