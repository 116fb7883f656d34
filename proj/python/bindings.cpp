#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccf/cli/commands.hpp"

namespace py = pybind11;
using namespace ccf;

namespace {

DirichletBox make_box(double s_lo, double s_hi, const std::vector<double>& t_lo,
                      const std::vector<double>& t_hi) {
  if (t_lo.size() != t_hi.size()) throw DimensionError("t_lo and t_hi differ in length");
  DirichletBox box{Interval::make(s_lo, s_hi), {}};
  for (std::size_t i = 0; i < t_lo.size(); ++i) {
    box.t_ranges.push_back(Interval::make(t_lo[i], t_hi[i]));
  }
  return box;
}

std::pair<double, double> pair_of(const Interval& x) { return {x.lo, x.hi}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounds on common-cause failure rates under imprecise conjugate priors";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<cli::ConfigError>(m, "ConfigError", error.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", error.ptr());

  m.def(
      "analyze_json",
      [](const std::string& config) {
        const auto c = cli::parse_config(nlohmann::json::parse(config));
        return cli::to_json(cli::run_analysis(c)).dump();
      },
      py::arg("config"), "Runs an analysis configuration given as JSON text; returns report JSON.");

  m.def(
      "reproduce_json",
      [](const std::string& name, std::optional<unsigned> order, std::optional<double> tolerance) {
        return cli::to_json(cli::reproduce(name, {order, tolerance})).dump();
      },
      py::arg("case"), py::arg("taylor_order") = py::none(), py::arg("tolerance") = py::none());

  m.def(
      "posterior_mean_theta",
      [](const std::vector<long>& counts, double s, const std::vector<double>& t) {
        return posterior_mean_theta(FailureCounts(counts), DirichletHyper{s, t});
      },
      py::arg("counts"), py::arg("s"), py::arg("t"));

  m.def(
      "theta_bounds",
      [](const std::vector<long>& counts, double s_lo, double s_hi,
         const std::vector<double>& t_lo, const std::vector<double>& t_hi) {
        std::vector<std::pair<double, double>> out;
        for (const Interval& x :
             idm_theta_bounds(FailureCounts(counts), make_box(s_lo, s_hi, t_lo, t_hi))) {
          out.push_back(pair_of(x));
        }
        return out;
      },
      py::arg("counts"), py::arg("s_lo"), py::arg("s_hi"), py::arg("t_lo"), py::arg("t_hi"));

  m.def(
      "qt_bounds",
      [](long failures, double exposure, double u_lo, double u_hi, double v_lo, double v_hi) {
        return pair_of(igm_qt_bounds(MarginalData{failures, exposure},
                                     GammaBox{Interval::make(u_lo, u_hi), Interval::make(v_lo, v_hi)}));
      },
      py::arg("failures"), py::arg("exposure"), py::arg("u_lo"), py::arg("u_hi"), py::arg("v_lo"),
      py::arg("v_hi"));

  m.def(
      "gj_bounds",
      [](const std::vector<long>& counts, double s_lo, double s_hi,
         const std::vector<double>& t_lo, const std::vector<double>& t_hi, int multiplicity,
         unsigned order) {
        const GjBounds g = optimize_gj_bounds(FailureCounts(counts), make_box(s_lo, s_hi, t_lo, t_hi),
                                              static_cast<int>(counts.size()), multiplicity, order,
                                              OptimizerSettings{});
        py::dict d;
        d["lower"] = g.bounds.lo;
        d["upper"] = g.bounds.hi;
        d["error_bound"] = g.error_bound;
        d["converged"] = g.converged();
        return d;
      },
      py::arg("counts"), py::arg("s_lo"), py::arg("s_hi"), py::arg("t_lo"), py::arg("t_hi"),
      py::arg("multiplicity"), py::arg("taylor_order") = kDefaultTaylorOrder);

  m.def(
      "qj_bounds",
      [](std::pair<double, double> g, double error, std::pair<double, double> qt) {
        return pair_of(qj_bounds(Interval::make(g.first, g.second), error,
                                 Interval::make(qt.first, qt.second)));
      },
      py::arg("g"), py::arg("error"), py::arg("qt"));

  m.def("truncated_reciprocal", &truncated_reciprocal, py::arg("x"), py::arg("order"));
}
