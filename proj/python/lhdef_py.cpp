#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lhdef/deformation.hpp"
#include "lhdef/errors.hpp"
#include "lhdef/invariants.hpp"
#include "lhdef/limit_scan.hpp"
#include "lhdef/scenario.hpp"
#include "lhdef/special.hpp"
#include "lhdef/verification.hpp"

namespace py = pybind11;
using namespace lhdef;

namespace {

// Deformed system frozen at construction; evaluation is by point.
class PyDeformed {
 public:
  PyDeformed(ClassTag tag, double z, std::optional<double> c)
      : dsys_(deform(make_class(tag, c), z)), F_(casimir_level(dsys_)), F2_(coupled_invariant(dsys_)) {}

  ClassTag tag() const { return dsys_.base.tag; }
  double c() const { return dsys_.base.c; }
  double z() const { return dsys_.z; }
  bool contains(double x, double y) const { return dsys_.base.domain({x, y}); }

  std::array<double, 3> hamiltonians(double x, double y) const {
    return {dsys_.h[0]({x, y}), dsys_.h[1]({x, y}), dsys_.h[2]({x, y})};
  }
  std::array<Vec2, 3> vector_fields(double x, double y) const {
    return {dsys_.X[0]({x, y}), dsys_.X[1]({x, y}), dsys_.X[2]({x, y})};
  }
  double casimir(double x, double y) const { return F_({x, y}); }
  double coupled(const Point<4>& p) const { return F2_(p); }

 private:
  DeformedSystem dsys_;
  ScalarField2D F_;
  TwoCopyField F2_;
};

py::dict row_to_dict(const CheckRow& r) {
  py::dict d;
  d["name"] = r.name;
  d["z"] = r.z ? py::cast(*r.z) : py::none();
  d["max_error"] = r.max_error;
  d["tolerance"] = r.tolerance;
  d["samples"] = r.samples;
  d["conformance"] = r.conformance;
  d["status"] = to_string(r.status);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deformed sl(2) Lie-Hamilton systems on the plane";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::enum_<ClassTag>(m, "ClassTag")
      .value("P2", ClassTag::P2)
      .value("I4", ClassTag::I4)
      .value("I5", ClassTag::I5);

  m.def("shc", [](double xi) { return lhdef::shc(xi); }, py::arg("xi"));
  m.def("parse_class_tag", [](const std::string& s) { return parse_class_tag(s); });
  m.def("default_casimir", &default_casimir);

  py::class_<PyDeformed>(m, "DeformedSystem")
      .def(py::init<ClassTag, double, std::optional<double>>(), py::arg("tag"), py::arg("z"),
           py::arg("c") = std::nullopt)
      .def_property_readonly("tag", &PyDeformed::tag)
      .def_property_readonly("c", &PyDeformed::c)
      .def_property_readonly("z", &PyDeformed::z)
      .def("contains", &PyDeformed::contains)
      .def("hamiltonians", &PyDeformed::hamiltonians, py::arg("x"), py::arg("y"))
      .def("vector_fields", &PyDeformed::vector_fields, py::arg("x"), py::arg("y"))
      .def("casimir", &PyDeformed::casimir, py::arg("x"), py::arg("y"))
      .def("coupled_invariant", &PyDeformed::coupled, py::arg("p"));

  m.def(
      "verify",
      [](ClassTag tag, const std::vector<double>& zs, std::uint64_t seed, std::size_t samples,
         double tolerance_scale) {
        VerifyOptions opt;
        opt.samples = samples;
        opt.tolerance_scale = tolerance_scale;
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify(tag, zs, seed, opt);
        }
        py::list rows;
        for (const auto& r : report.rows) rows.append(row_to_dict(r));
        py::dict out;
        out["passed"] = report.passed();
        out["rows"] = rows;
        return out;
      },
      py::arg("tag"), py::arg("z") = std::vector<double>{0.0, 0.1, 0.5}, py::arg("seed") = 42,
      py::arg("samples") = 100, py::arg("tolerance_scale") = 1.0);

  m.def(
      "limit_scan",
      [](ClassTag tag, const std::vector<double>& zs) {
        std::ostringstream out;
        write_limit_scan_csv(out, limit_scan(tag, zs, default_grid(tag)));
        return out.str();
      },
      py::arg("tag"), py::arg("z") = std::vector<double>{0.2, 0.1, 0.05, 0.025, 0.0125},
      "Classical-limit table as CSV text.");

  m.def(
      "run_scenario",
      [](const std::string& config_text) {
        std::istringstream in(config_text);
        const ScenarioConfig cfg = parse_scenario(in);
        std::ostringstream csv;
        const RunResult r = run_scenario(cfg, csv);
        return py::make_tuple(csv.str(), r.truncated, r.summary);
      },
      py::arg("config_text"), "Runs an INI scenario; returns (csv, truncated, summary).");
}
