#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twogap/cli.hpp"
#include "twogap/domain.hpp"
#include "twogap/errors.hpp"
#include "twogap/predictor.hpp"
#include "twogap/records.hpp"
#include "twogap/remez.hpp"
#include "twogap/ring_green.hpp"

namespace py = pybind11;
using namespace twogap;

namespace {

records::RemezRecord best_approx(double a, double b, int n, std::optional<int> digits,
                                 std::optional<double> tol) {
  const TwoIntervalDomain d{a, b};
  validate(d, true);
  const remez::PrecisionContext pc =
      digits ? remez::PrecisionContext{*digits} : remez::PrecisionContext::automatic(d, n);
  py::gil_scoped_release release;
  return records::make_remez_record(remez::best_approx(d, n, pc, tol));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_twogap, m) {
  m.doc() = "Minimax approximation of sgn on two intervals and its asymptotics";

  auto convergence = py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                                              PyExc_RuntimeError);
  py::register_exception<PrecisionError>(m, "PrecisionError", convergence.ptr());
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<GreenCharacteristics>(m, "GreenCharacteristics")
      .def_readonly("a", &GreenCharacteristics::A)
      .def_readonly("b", &GreenCharacteristics::B)
      .def_readonly("c_crit", &GreenCharacteristics::C)
      .def_readonly("eta", &GreenCharacteristics::eta)
      .def_readonly("eta1", &GreenCharacteristics::eta1)
      .def_readonly("eta2", &GreenCharacteristics::eta2)
      .def_readonly("alpha", &GreenCharacteristics::alpha)
      .def_readonly("omega_c", &GreenCharacteristics::omegaC)
      .def_readonly("p", &GreenCharacteristics::p)
      .def_readonly("rho", &GreenCharacteristics::rho)
      .def_readonly("c0_abs", &GreenCharacteristics::c0_abs)
      .def("to_json", [](const GreenCharacteristics& c) { return records::to_json(c).dump(); })
      .def("__repr__", [](const GreenCharacteristics& c) {
        return "GreenCharacteristics(" + records::to_json(c).dump() + ")";
      });

  m.def(
      "characteristics",
      [](double a, double b) { return ring::complete_characteristics({a, b}); },
      py::arg("a"), py::arg("b"));
  m.def(
      "harmonic_measure",
      [](double a, double b, double x) { return domain_chars::harmonic_measure({a, b}, x); },
      py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("green_dc", [](const GreenCharacteristics& c, double D) { return ring::green_DC(c, D); },
        py::arg("chars"), py::arg("d"));

  py::class_<predictor::PredictionRecord>(m, "PredictionRecord")
      .def_readonly("n", &predictor::PredictionRecord::n)
      .def_readonly("phase", &predictor::PredictionRecord::phase)
      .def_readonly("D_n", &predictor::PredictionRecord::D_n)
      .def_readonly("G_DC", &predictor::PredictionRecord::G_DC)
      .def_readonly("a_n", &predictor::PredictionRecord::a_n)
      .def_readonly("L_theorem", &predictor::PredictionRecord::L_theorem)
      .def_readonly("L_refined", &predictor::PredictionRecord::L_refined)
      .def_readonly("theta_ratio", &predictor::PredictionRecord::theta_ratio)
      .def_readonly("theta_ratio_raw", &predictor::PredictionRecord::theta_ratio_raw);

  m.def("predict", py::overload_cast<int, const GreenCharacteristics&>(&predictor::predict),
        py::arg("n"), py::arg("chars"));
  m.def("theta_ratio", &predictor::theta_ratio, py::arg("n"), py::arg("chars"));
  m.def("theorem_constant", &predictor::theorem_constant, py::arg("chars"));
  m.def("symmetric_reference", &predictor::symmetric_reference, py::arg("m"), py::arg("a"));
  m.def("degenerate_reference", &predictor::degenerate_reference, py::arg("n"), py::arg("a"));

  py::class_<records::RemezRecord>(m, "RemezResult")
      .def_readonly("a", &records::RemezRecord::a)
      .def_readonly("b", &records::RemezRecord::b)
      .def_readonly("n", &records::RemezRecord::n)
      .def_readonly("digits", &records::RemezRecord::digits)
      .def_readonly("L", &records::RemezRecord::L)
      .def_readonly("L_upper", &records::RemezRecord::L_upper)
      .def_readonly("m", &records::RemezRecord::m)
      .def_readonly("K", &records::RemezRecord::K)
      .def_readonly("N", &records::RemezRecord::N)
      .def_property_readonly("case",
                             [](const records::RemezRecord& r) -> std::optional<std::string> {
                               if (!r.case_label) return std::nullopt;
                               return std::string(1, *r.case_label);
                             })
      .def_readonly("n1", &records::RemezRecord::n1)
      .def_readonly("n2", &records::RemezRecord::n2)
      .def_readonly("iterations", &records::RemezRecord::iterations)
      .def_readonly("coefficients", &records::RemezRecord::coefficients)
      .def_readonly("alternation", &records::RemezRecord::alternation)
      .def("to_json", [](const records::RemezRecord& r) { return records::to_json(r).dump(); });

  m.def("best_approx", &best_approx, py::arg("a"), py::arg("b"), py::arg("n"),
        py::arg("digits") = py::none(), py::arg("tol") = py::none(),
        "Minimax error of degree n; L is a decimal string at the working precision.");
  m.def(
      "grid_reference",
      [](double a, double b, int n, int grid_size) {
        return remez::grid_reference({a, b}, n, grid_size);
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("grid_size") = 4000);

  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
