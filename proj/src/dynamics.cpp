#include "lhdef/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "lhdef/errors.hpp"
#include "lhdef/invariants.hpp"

namespace lhdef {

CoefficientCurve::CoefficientCurve(Kind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {
  for (double v : params_)
    if (!std::isfinite(v)) throw ConfigError("coefficient curve parameters must be finite");
}

CoefficientCurve CoefficientCurve::constant(double value) {
  return CoefficientCurve(Kind::constant, {value});
}

CoefficientCurve CoefficientCurve::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) throw ConfigError("polynomial curve needs at least one coefficient");
  return CoefficientCurve(Kind::polynomial, std::move(coefficients));
}

CoefficientCurve CoefficientCurve::sinusoid(double amplitude, double frequency, double phase,
                                            double offset) {
  return CoefficientCurve(Kind::sinusoid, {amplitude, frequency, phase, offset});
}

std::array<DrivePreset, 3> preset_drives() {
  using C = CoefficientCurve;
  return {DrivePreset{"constant", {C::constant(1.0), C::constant(0.0), C::constant(1.0)}},
          DrivePreset{"oscillator",
                      {C::constant(1.0), C::constant(0.0), C::sinusoid(0.5, 2.0, 0.0, 1.0)}},
          DrivePreset{"mixed",
                      {C::sinusoid(0.8, 3.0, 0.4, 0.2), C::polynomial({0.0, 0.5}),
                       C::polynomial({0.3, 0.0, 0.4})}}};
}

CoefficientCurve CoefficientCurve::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  in.imbue(std::locale::classic());
  std::string kind;
  if (!(in >> kind)) throw ConfigError("empty coefficient curve specification");
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::istringstream num(token);
    num.imbue(std::locale::classic());
    double v;
    if (!(num >> v) || !num.eof())
      throw ConfigError("bad number '" + token + "' in curve '" + std::string(text) + "'");
    values.push_back(v);
  }
  if (kind == "constant") {
    if (values.size() != 1) throw ConfigError("constant curve takes exactly one value");
    return constant(values[0]);
  }
  if (kind == "polynomial") return polynomial(std::move(values));
  if (kind == "sinusoid") {
    if (values.size() < 2 || values.size() > 4)
      throw ConfigError("sinusoid curve takes amplitude frequency [phase [offset]]");
    values.resize(4, 0.0);
    return sinusoid(values[0], values[1], values[2], values[3]);
  }
  throw ConfigError("unknown curve kind '" + kind + "' (constant, polynomial, sinusoid)");
}

double CoefficientCurve::operator()(double t) const {
  switch (kind_) {
    case Kind::constant: return params_[0];
    case Kind::polynomial: {
      double acc = 0.0;
      for (auto it = params_.rbegin(); it != params_.rend(); ++it) acc = acc * t + *it;
      return acc;
    }
    case Kind::sinusoid: return params_[0] * std::cos(params_[1] * t + params_[2]) + params_[3];
  }
  return 0.0;
}

std::string CoefficientCurve::describe() const {
  std::string out;
  switch (kind_) {
    case Kind::constant: out = "constant"; break;
    case Kind::polynomial: out = "polynomial"; break;
    case Kind::sinusoid: out = "sinusoid"; break;
  }
  char buf[32];
  for (double v : params_) {
    std::snprintf(buf, sizeof buf, " %.17g", v);
    out += buf;
  }
  return out;
}

TimeDependentField<2> assemble(const DeformedSystem& dsys, const DriveTriple& b) {
  const auto X = dsys.X;
  return {[X, b](double t, const Point2& p) {
            Point2 out{0.0, 0.0};
            for (std::size_t i = 0; i < 3; ++i) {
              const double bi = b[i](t);
              if (bi == 0.0) continue;
              const Vec2 v = X[i].eval(p);
              out[0] += bi * v[0];
              out[1] += bi * v[1];
            }
            return out;
          },
          dsys.base.domain};
}

TimeDependentField<4> assemble_two_copy(const DeformedSystem& dsys, const DriveTriple& b) {
  return {[dsys, b](double t, const Point<4>& p) {
            const auto lifted = lifted_hamiltonians_at(dsys, p);
            Point<4> out{};
            for (std::size_t i = 0; i < 3; ++i) {
              const double bi = b[i](t);
              if (bi == 0.0) continue;
              const Point<4> v = product_hamiltonian_vector(lifted[i], dsys.base.omega, p);
              for (std::size_t k = 0; k < 4; ++k) out[k] += bi * v[k];
            }
            return out;
          },
          two_copy_domain(dsys.base)};
}

DriftReport drift_of(const std::string& name, const std::vector<double>& times,
                     const std::vector<double>& values) {
  DriftReport r;
  r.name = name;
  if (values.empty()) return r;
  r.initial = values.front();
  r.time_of_max = times.empty() ? 0.0 : times.front();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double dev = std::abs(values[i] - r.initial);
    if (dev > r.max_abs_deviation) {
      r.max_abs_deviation = dev;
      r.time_of_max = times[i];
    }
  }
  r.max_rel_deviation = std::abs(r.initial) >= kRelativeFloor
                            ? r.max_abs_deviation / std::abs(r.initial)
                            : r.max_abs_deviation;
  return r;
}

}  // namespace lhdef
