#ifndef LHDEF_SCENARIO_HPP
#define LHDEF_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lhdef/dynamics.hpp"
#include "lhdef/sl2_catalog.hpp"

namespace lhdef {

enum class Mode { single, two_copy };

/// One integration run, read from an INI-style file:
///
///   [system]       class = P2|I4|I5, z = <real>, casimir = <real> (optional),
///                  guard = <real> (optional)
///   [drive]        b1, b2, b3 = curve specs (see CoefficientCurve::parse)
///   [integration]  mode = single|two_copy, initial = "x y" or "x1 y1 x2 y2",
///                  t0, t1, dt
///   [output]       csv = <path> (optional), seed = <int> (optional)
struct ScenarioConfig {
  ClassTag tag = ClassTag::P2;
  std::optional<double> c_override;
  double guard = kDefaultGuard;
  double z = 0.0;
  DriveTriple b{CoefficientCurve::constant(0.0), CoefficientCurve::constant(0.0),
                CoefficientCurve::constant(0.0)};
  Mode mode = Mode::single;
  std::vector<double> initial;
  double t0 = 0.0;
  double t1 = 1.0;
  double dt = 1e-3;
  std::string csv_path;
  std::uint64_t seed = 0;
};

/// Throws ConfigError on unknown keys, missing required keys or bad values.
ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig load_scenario(const std::string& path);

/// Checks dt > 0, t1 > t0, dimension of `initial` against the mode and that
/// the initial point lies in the class domain. Throws ConfigError.
void validate(const ScenarioConfig& config);

struct RunResult {
  bool truncated = false;
  std::size_t rows = 0;
  std::vector<DriftReport> drifts;
  std::string summary;
};

/// Integrates the scenario and writes the CSV: header row, then
/// t, state coordinates and invariant columns (F_z, or F_z at each copy and
/// F_z^(2) in two-copy mode), 17 significant digits.
RunResult run_scenario(const ScenarioConfig& config, std::ostream& csv);

}  // namespace lhdef

#endif  // LHDEF_SCENARIO_HPP
