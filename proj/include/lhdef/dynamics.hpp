#ifndef LHDEF_DYNAMICS_HPP
#define LHDEF_DYNAMICS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lhdef/deformation.hpp"
#include "lhdef/fields.hpp"

namespace lhdef {

/// A time-dependent coefficient b(t) from one of three parametric families:
///   constant   b(t) = v
///   polynomial b(t) = a0 + a1 t + a2 t^2 + ...
///   sinusoid   b(t) = amplitude * cos(frequency * t + phase) + offset
class CoefficientCurve {
 public:
  enum class Kind { constant, polynomial, sinusoid };

  static CoefficientCurve constant(double value);
  static CoefficientCurve polynomial(std::vector<double> coefficients);
  static CoefficientCurve sinusoid(double amplitude, double frequency, double phase = 0.0,
                                   double offset = 0.0);
  /// Parses "constant 1", "polynomial 0.5 0 0.1", "sinusoid 1 2 0 0.5".
  /// Missing trailing sinusoid parameters default to 0. Throws ConfigError.
  static CoefficientCurve parse(std::string_view text);

  double operator()(double t) const;
  Kind kind() const { return kind_; }
  const std::vector<double>& parameters() const { return params_; }
  std::string describe() const;

 private:
  CoefficientCurve(Kind kind, std::vector<double> params);
  Kind kind_;
  std::vector<double> params_;
};

using DriveTriple = std::array<CoefficientCurve, 3>;

struct DrivePreset {
  std::string name;
  DriveTriple b;
};

/// Three illustrative drives: constant (1, 0, 1), an oscillator-like
/// (1, 0, 1 + 0.5 cos 2t) and a mixed polynomial/sinusoid triple.
std::array<DrivePreset, 3> preset_drives();

/// A nonautonomous vector field (t, p) -> dp/dt with a domain guard.
template <std::size_t N>
struct TimeDependentField {
  std::function<Point<N>(double, const Point<N>&)> rhs;
  Domain<N> domain;
};

/// X_{z,t}(p) = sum_i b_i(t) X_{z,i}(p).
TimeDependentField<2> assemble(const DeformedSystem& dsys, const DriveTriple& b);

/// The same drive applied to the Hamiltonian fields of the lifted Hamiltonians
/// h_{z,i}^(2) under the product symplectic form; preserves F_z^(2).
TimeDependentField<4> assemble_two_copy(const DeformedSystem& dsys, const DriveTriple& b);

struct InvariantSeries {
  std::string name;
  std::vector<double> values;
};

template <std::size_t N>
struct Trajectory {
  std::vector<double> times;
  std::vector<Point<N>> states;
  /// Set when a stage point left the domain or became non-finite; the
  /// trajectory then stops at the last accepted step.
  bool truncated = false;
  std::vector<InvariantSeries> invariants;
};

inline constexpr double kRelativeFloor = 1e-12;

struct DriftReport {
  std::string name;
  double initial = 0.0;
  double max_abs_deviation = 0.0;
  /// Deviation divided by |initial|; equals the absolute deviation when
  /// |initial| < kRelativeFloor (a zero level set sampled with round-off).
  double max_rel_deviation = 0.0;
  double time_of_max = 0.0;
};

/// Classical fixed-step RK4. The last step is shortened to land on t1.
/// Throws std::invalid_argument if p0 is outside the domain or the step is
/// inconsistent; leaving the domain mid-run truncates instead of throwing.
template <std::size_t N>
Trajectory<N> integrate_rk4(const TimeDependentField<N>& field, const Point<N>& p0, double t0,
                            double t1, double dt) {
  if (!(t1 > t0)) throw std::invalid_argument("integrate_rk4: need t1 > t0");
  if (!(dt > 0.0) || dt > t1 - t0)
    throw std::invalid_argument("integrate_rk4: need 0 < dt <= t1 - t0");
  if (!field.domain(p0)) throw std::invalid_argument("integrate_rk4: initial point outside domain");

  const auto admissible = [&field](const Point<N>& p) {
    for (double v : p)
      if (!std::isfinite(v)) return false;
    return field.domain(p);
  };
  const auto axpy = [](const Point<N>& p, double a, const Point<N>& k) {
    Point<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = p[i] + a * k[i];
    return out;
  };

  Trajectory<N> traj;
  const auto steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt - 1e-9));
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(t0);
  traj.states.push_back(p0);

  Point<N> p = p0;
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = t0 + static_cast<double>(n) * dt;
    const double t_next = (n + 1 == steps) ? t1 : t0 + static_cast<double>(n + 1) * dt;
    const double h = t_next - t;

    const Point<N> k1 = field.rhs(t, p);
    const Point<N> s2 = axpy(p, 0.5 * h, k1);
    if (!admissible(s2)) break;
    const Point<N> k2 = field.rhs(t + 0.5 * h, s2);
    const Point<N> s3 = axpy(p, 0.5 * h, k2);
    if (!admissible(s3)) break;
    const Point<N> k3 = field.rhs(t + 0.5 * h, s3);
    const Point<N> s4 = axpy(p, h, k3);
    if (!admissible(s4)) break;
    const Point<N> k4 = field.rhs(t_next, s4);
    Point<N> next;
    for (std::size_t i = 0; i < N; ++i)
      next[i] = p[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!admissible(next)) break;

    p = next;
    traj.times.push_back(t_next);
    traj.states.push_back(p);
  }
  traj.truncated = traj.times.size() != steps + 1;
  return traj;
}

/// Appends the values of `invariant` along the trajectory as a named series.
template <std::size_t N>
const InvariantSeries& track(Trajectory<N>& traj, const ScalarField<N>& invariant,
                             std::string name) {
  InvariantSeries series{std::move(name), {}};
  series.values.reserve(traj.states.size());
  for (const auto& s : traj.states) series.values.push_back(invariant.eval(s));
  traj.invariants.push_back(std::move(series));
  return traj.invariants.back();
}

DriftReport drift_of(const std::string& name, const std::vector<double>& times,
                     const std::vector<double>& values);

/// Maximum deviation of `invariant` from its initial value along `traj`.
template <std::size_t N>
DriftReport invariant_drift(const Trajectory<N>& traj, const ScalarField<N>& invariant,
                            std::string name = {}) {
  std::vector<double> values;
  values.reserve(traj.states.size());
  for (const auto& s : traj.states) values.push_back(invariant.eval(s));
  return drift_of(name.empty() ? invariant.name() : name, traj.times, values);
}

}  // namespace lhdef

#endif  // LHDEF_DYNAMICS_HPP
