#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "condgrad/diagnostics.hpp"
#include "condgrad/harness.hpp"
#include "condgrad/matrix_market.hpp"
#include "condgrad/problem_gen.hpp"
#include "condgrad/solvers.hpp"
#include "condgrad/version.hpp"

namespace py = pybind11;
using namespace condgrad;

namespace {

StepRule rule_from_string(const std::string& s) { return parse_step_rule(s); }

StopCriterion make_stop(double eps_gap, std::uint64_t max_iters, std::uint64_t max_lmo) {
    return StopCriterion{eps_gap, max_iters, max_lmo};
}

} // namespace

PYBIND11_MODULE(_condgrad, m) {
    m.doc() = "Projection-free conditional-gradient solvers for sparse box quadratics";
    m.attr("__version__") = kVersion;

    py::class_<CsrMatrix>(m, "CsrMatrix")
        .def_static(
            "from_triplets",
            [](const std::vector<std::tuple<std::size_t, std::size_t, double>>& trips,
               std::size_t n_rows, std::size_t n_cols) {
                std::vector<Triplet> ts;
                ts.reserve(trips.size());
                for (const auto& [r, c, v] : trips) ts.push_back({r, c, v});
                return CsrMatrix::from_triplets(ts, n_rows, n_cols);
            },
            py::arg("triplets"), py::arg("n_rows"), py::arg("n_cols"))
        .def_property_readonly("n_rows", &CsrMatrix::n_rows)
        .def_property_readonly("n_cols", &CsrMatrix::n_cols)
        .def_property_readonly("nnz", &CsrMatrix::nnz)
        .def_property_readonly("row_nnz_max", &CsrMatrix::row_nnz_max)
        .def_property_readonly("col_nnz_max", &CsrMatrix::col_nnz_max)
        .def("entries",
             [](const CsrMatrix& a) {
                 std::vector<std::tuple<std::size_t, std::size_t, double>> out;
                 for (const Triplet& t : a.entries()) out.emplace_back(t.row, t.col, t.value);
                 return out;
             })
        .def("matvec", [](const CsrMatrix& a, const DenseVector& x) { return matvec(a, x); })
        .def("matvec_t",
             [](const CsrMatrix& a, const DenseVector& v) { return matvec_transpose(a, v); });

    m.def("read_matrix_market", &read_matrix_market_file, py::arg("path"));
    m.def("write_matrix_market", &write_matrix_market_file, py::arg("path"), py::arg("matrix"));

    py::class_<AxisBox>(m, "AxisBox")
        .def(py::init<DenseVector, DenseVector>(), py::arg("lo"), py::arg("hi"))
        .def_static("unit", &AxisBox::unit, py::arg("n"))
        .def_readonly("lo", &AxisBox::lo)
        .def_readonly("hi", &AxisBox::hi)
        .def_property_readonly("dim", &AxisBox::dim)
        .def("contains",
             [](const AxisBox& b, const DenseVector& x, double tol) {
                 return contains(b, x, tol);
             },
             py::arg("x"), py::arg("tol") = 1e-12)
        .def("diameter", [](const AxisBox& b) { return box_diameter(b); });

    py::class_<Simplex>(m, "Simplex").def(py::init<std::size_t>(), py::arg("n"));

    m.def("lmo_box",
          [](const AxisBox& b, const DenseVector& p) { return lmo_box(b, p); });
    m.def("lmo_simplex",
          [](const Simplex& s, const DenseVector& p) { return lmo_simplex(s, p); });
    m.def("intersect_box_ball",
          [](const AxisBox& b, const DenseVector& c, double r) {
              return intersect_box_ball(b, c, r);
          });

    py::class_<QuadraticForm>(m, "QuadraticForm")
        .def(py::init<CsrMatrix>(), py::arg("matrix"))
        .def_property_readonly("n", &QuadraticForm::n)
        .def("value", [](const QuadraticForm& q, const DenseVector& x) { return q.value(x); })
        .def("gradient",
             [](const QuadraticForm& q, const DenseVector& x) { return q.gradient(x); });

    m.def("estimate_spectral",
          [](const QuadraticForm& q, double tol, int max_iter) {
              const SpectralEstimate est = estimate_spectral(q, tol, max_iter);
              return py::make_tuple(est.L, est.mu);
          },
          py::arg("q"), py::arg("tol") = 1e-8, py::arg("max_iter") = 20000);

    py::class_<IterRecord>(m, "IterRecord")
        .def_readonly("outer", &IterRecord::outer)
        .def_readonly("inner", &IterRecord::inner)
        .def_readonly("f_value", &IterRecord::f_value)
        .def_readonly("fw_gap", &IterRecord::fw_gap)
        .def_readonly("gamma", &IterRecord::gamma)
        .def_readonly("radius", &IterRecord::radius)
        .def_readonly("lmo_count", &IterRecord::lmo_count)
        .def_readonly("matvec_count", &IterRecord::matvec_count)
        .def_readonly("elapsed_ns", &IterRecord::elapsed_ns);

    py::class_<Solution>(m, "Solution")
        .def_readonly("x", &Solution::x)
        .def_readonly("f_value", &Solution::f_value)
        .def_readonly("trace", &Solution::trace)
        .def_readonly("total_iterations", &Solution::total_iterations)
        .def_property_readonly("status",
                               [](const Solution& s) { return to_string(s.status); });

    m.def("frank_wolfe",
          [](const QuadraticForm& q, const AxisBox& box, DenseVector x0,
             const std::string& rule, double eps_gap, std::uint64_t max_iters,
             std::uint64_t max_lmo) {
              return frank_wolfe(q, box, std::move(x0), rule_from_string(rule),
                                 make_stop(eps_gap, max_iters, max_lmo));
          },
          py::arg("q"), py::arg("box"), py::arg("x0"), py::arg("rule") = "exact",
          py::arg("eps_gap") = 1e-6, py::arg("max_iters") = 0, py::arg("max_lmo") = 0);

    m.def("frank_wolfe_simplex",
          [](const QuadraticForm& q, const Simplex& s, DenseVector x0,
             const std::string& rule, double eps_gap, std::uint64_t max_iters,
             std::uint64_t max_lmo) {
              return frank_wolfe(q, s, std::move(x0), rule_from_string(rule),
                                 make_stop(eps_gap, max_iters, max_lmo));
          },
          py::arg("q"), py::arg("simplex"), py::arg("x0"), py::arg("rule") = "exact",
          py::arg("eps_gap") = 1e-6, py::arg("max_iters") = 0, py::arg("max_lmo") = 0);

    m.def("shrinking_cg",
          [](const QuadraticForm& q, const AxisBox& box, DenseVector x0, double L, double mu,
             double eps, const std::string& rule, bool stop_on_gap) {
              ScgOptions opts;
              opts.stop_on_gap = stop_on_gap;
              return shrinking_cg(q, box, std::move(x0), L, mu, eps, rule_from_string(rule),
                                  opts);
          },
          py::arg("q"), py::arg("box"), py::arg("x0"), py::arg("L"), py::arg("mu"),
          py::arg("eps"), py::arg("rule") = "exact", py::arg("stop_on_gap") = true);

    m.def("monteiro_svaiter",
          [](const QuadraticForm& q, const AxisBox& box, DenseVector x0, double kappa,
             double eps_gap, std::uint64_t max_iters) {
              return monteiro_svaiter(q, box, std::move(x0), kappa,
                                      make_stop(eps_gap, max_iters, 0));
          },
          py::arg("q"), py::arg("box"), py::arg("x0"), py::arg("kappa"),
          py::arg("eps_gap") = 1e-6, py::arg("max_iters") = 0);

    m.def("projected_gradient",
          [](const QuadraticForm& q, const AxisBox& box, DenseVector x0, double L,
             double eps_gap, std::uint64_t max_iters) {
              return projected_gradient(q, box, std::move(x0), L,
                                        make_stop(eps_gap, max_iters, 0));
          },
          py::arg("q"), py::arg("box"), py::arg("x0"), py::arg("L"),
          py::arg("eps_gap") = 1e-12, py::arg("max_iters") = 0);

    m.def("fw_gap",
          [](const QuadraticForm& q, const DenseVector& y, const AxisBox& box) {
              return fw_gap(q, y, box);
          });

    m.def("generate_problem",
          [](std::size_t n, std::size_t s, double mu_target, std::uint64_t seed, double lo,
             double hi) {
              GeneratedProblem g = generate_problem({n, s, mu_target, seed, {lo, hi}});
              return py::make_tuple(std::move(g.A), std::move(g.domain));
          },
          py::arg("n"), py::arg("s"), py::arg("mu_target") = 1.0, py::arg("seed") = 0,
          py::arg("lo") = -1.0, py::arg("hi") = 1.0);

    m.def("initial_point", &initial_point, py::arg("box"), py::arg("seed"));

    m.def("predict",
          [](std::uint64_t n, double L, double mu, double D, double R0, double eps) {
              const PredictorReport r = make_predictor_report(n, L, mu, D, R0, eps);
              py::dict d;
              d["classic_fw_iters"] = r.classic_fw_iters;
              d["lmo_lower_bound"] = r.lmo_lower;
              d["scg_inner_per_restart"] = r.scg.inner_per_restart;
              d["scg_restarts_displayed"] = r.scg.restarts_displayed;
              d["scg_restarts_log"] = r.scg.restarts_log;
              d["scg_total_displayed"] = r.scg.displayed;
              d["scg_total_log"] = r.scg.log_variant;
              return d;
          },
          py::arg("n"), py::arg("L"), py::arg("mu"), py::arg("D"), py::arg("R0"),
          py::arg("eps"));
}
