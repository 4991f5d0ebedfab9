// Python bindings for the main operations.  Structured inputs (pairs,
// families, measures, means) travel as the same JSON descriptors the CLI
// consumes; scalar-only operations bind directly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meancomp/errors.hpp"
#include "meancomp/json_io.hpp"

namespace py = pybind11;
using namespace meancomp;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid JSON descriptor: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized Bajraktarevic means: evaluation and comparison";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError",
                                          PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  m.def(
      "eval_implicit",
      [](const std::string& mean_json, const std::vector<double>& x) {
        return eval_implicit(load_mean(parse(mean_json)), x);
      },
      py::arg("mean_json"), py::arg("x"),
      "Evaluate a mean (JSON descriptor) through its defining equation.");

  m.def(
      "eval_explicit",
      [](const std::string& mean_json, const std::vector<double>& x) {
        return eval_explicit(load_mean(parse(mean_json)), x);
      },
      py::arg("mean_json"), py::arg("x"),
      "Evaluate a mean through the explicit inverse-ratio formula.");

  m.def(
      "gini_mean",
      [](double p, double q, const std::string& family_json,
         const std::string& measure_json, const std::vector<double>& x) {
        const MeanFamily fam = load_family(parse(family_json));
        return gini_mean(
            p, q, fam,
            attach_carrier(load_measure(parse(measure_json)), fam.carrier), x);
      },
      py::arg("p"), py::arg("q"), py::arg("family_json"),
      py::arg("measure_json"), py::arg("x"));

  m.def("holder_mean",
        [](double p, const std::vector<double>& x) { return holder_mean(p, x); },
        py::arg("p"), py::arg("x"));
  m.def("stolarsky_mean", &stolarsky_mean, py::arg("p"), py::arg("q"),
        py::arg("x1"), py::arg("x2"));
  m.def("delta_gini", &delta_gini, py::arg("p"), py::arg("q"), py::arg("t"));
  m.def("capital_delta_gini", &capital_delta_gini, py::arg("p"), py::arg("q"),
        py::arg("x"), py::arg("y"));

  m.def(
      "diagonal_derivatives",
      [](const std::string& mean_json, double x0) {
        return dump_json_17(
            to_json(mean_diag_derivatives(load_mean(parse(mean_json)), x0)));
      },
      py::arg("mean_json"), py::arg("x0"),
      "Diagonal gradient/Hessian as a JSON string.");

  m.def(
      "compare_local",
      [](const std::string& m_json, const std::string& n_json, double x0) {
        const ComparisonVerdict v = local_verdict(load_mean(parse(m_json)),
                                                  load_mean(parse(n_json)), x0);
        return dump_json_17(to_json(v));
      },
      py::arg("m_json"), py::arg("n_json"), py::arg("x0"),
      "Local comparison verdict as a JSON string.");

  m.def(
      "gini_global",
      [](double p, double q, double r, double s, double ratio_sup) {
        return dump_json_17(to_json(gini_global(p, q, r, s, ratio_sup)));
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"),
      py::arg("ratio_sup"),
      "Global Gini comparison verdict as a JSON string (use "
      "float('inf') for an unbounded envelope ratio).");

  m.def(
      "holder_compare",
      [](double p, double q) {
        return dump_json_17(to_json(holder_compare(p, q)));
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "brute_force_compare",
      [](const std::string& m_json, const std::string& n_json, double lo,
         double hi, int n_samples, uint64_t seed) {
        const OracleReport r =
            brute_force_compare(load_mean(parse(m_json)),
                                load_mean(parse(n_json)), Interval{lo, hi},
                                n_samples, seed);
        return dump_json_17(to_json(r));
      },
      py::arg("m_json"), py::arg("n_json"), py::arg("lo"), py::arg("hi"),
      py::arg("n_samples") = 512, py::arg("seed") = 1,
      "Sampling oracle report as a JSON string.");

  m.def("run_scenario",
        [](const std::string& name, uint64_t seed) {
          return dump_json_17(to_json(run_scenario(name, seed)));
        },
        py::arg("name"), py::arg("seed") = 1);
  m.def("scenario_names", &scenario_names);
}
