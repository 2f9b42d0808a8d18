#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "hpa/duality.hpp"
#include "hpa/hopf.hpp"
#include "hpa/io.hpp"
#include "hpa/network.hpp"
#include "hpa/tilings.hpp"

namespace py = pybind11;
using namespace hpa;

namespace {

std::vector<std::tuple<std::string, bool, std::string>> checks(const Report& r) {
  std::vector<std::tuple<std::string, bool, std::string>> out;
  for (const auto& c : r.checks) out.emplace_back(c.name, c.passed, c.detail);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact planar algebra evaluation over Q(delta)";

  py::register_exception<HopfError>(m, "HopfError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI command; returns (exit code, stdout, stderr).");

  py::class_<HopfAlgebra>(m, "HopfAlgebra")
      .def_static("load", &load_hopf, py::arg("path"), py::arg("delta_sign") = 1)
      .def_static(
          "group", [](const GroupTable& t, int sign) { return HopfAlgebra::group_algebra(t, sign); },
          py::arg("table"), py::arg("delta_sign") = 1)
      .def_property_readonly("dim", &HopfAlgebra::dim)
      .def_property_readonly("basis", &HopfAlgebra::basis_names)
      .def_property_readonly("delta", [](const HopfAlgebra& h) { return h.delta().to_string(); })
      .def("verify", [](const HopfAlgebra& h) { return checks(verify_axioms(h)); })
      .def("dual", [](const HopfAlgebra& h) { return build_dual(h); })
      .def("__repr__", [](const HopfAlgebra& h) {
        return "<HopfAlgebra dim=" + std::to_string(h.dim()) + ">";
      });

  m.def(
      "evaluate",
      [](const std::string& network_json, const HopfAlgebra& h) {
        return evaluate(network_from_json(json::parse(network_json), h), h).to_string();
      },
      py::arg("network_json"), py::arg("h"), "Partition function of a network given as JSON text.");

  m.def(
      "evaluate_file",
      [](const std::string& path, const HopfAlgebra& h) { return evaluate(load_network(path, h), h).to_string(); },
      py::arg("path"), py::arg("h"));

  m.def(
      "duality",
      [](const std::string& path, const HopfAlgebra& h, const HopfAlgebra& h_star) {
        const auto r = verify_duality_on_network(h, h_star, load_network(path, h));
        return std::make_tuple(r.lhs.to_string(), r.rhs.to_string());
      },
      py::arg("path"), py::arg("h"), py::arg("h_star"), "(Z over H, Z over the dual after F) for a network file.");

  m.def(
      "tilings",
      [](int k) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_tilings(k)) out.push_back(to_string(t));
        return out;
      },
      py::arg("k"));

  m.attr("EXIT_OK") = exit_code::ok;
  m.attr("EXIT_VERIFICATION_FAILED") = exit_code::verification_failed;
  m.attr("EXIT_INPUT_ERROR") = exit_code::input_error;
  m.attr("EXIT_BUDGET_EXCEEDED") = exit_code::budget_exceeded;
}
