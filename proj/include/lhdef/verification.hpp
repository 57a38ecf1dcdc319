#ifndef LHDEF_VERIFICATION_HPP
#define LHDEF_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lhdef/fields.hpp"
#include "lhdef/sl2_catalog.hpp"

namespace lhdef {

/// pass/fail for identity checks. Conformance rows compare against
/// transcribed closed forms; a mismatch there is reported as `flagged`
/// with its residual and does not fail the report.
enum class CheckStatus { pass, fail, flagged };

std::string to_string(CheckStatus status);

struct CheckRow {
  std::string name;
  std::optional<double> z;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool conformance = false;
  CheckStatus status = CheckStatus::pass;
};

struct VerificationReport {
  ClassTag tag = ClassTag::P2;
  double c = 0.0;
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  std::vector<CheckRow> rows;

  /// True iff no row failed.
  bool passed() const;
  /// Appends a row, setting its status from max_error vs tolerance.
  CheckRow& add(std::string name, std::optional<double> z, double max_error, double tolerance,
                std::size_t samples, bool conformance = false);
  const CheckRow* find(const std::string& name, std::optional<double> z) const;
};

struct VerifyOptions {
  std::size_t samples = 100;
  /// Multiplies every tolerance.
  double tolerance_scale = 1.0;
};

/// Mixed absolute/relative error |a - b| / max(1, |b|).
double scaled_error(double a, double b);

/// Uniform sample from a fixed box inside the class domain, away from the
/// singular set: P2/I5 x in [-1.5, 1.5], y in [0.5, 2.5]; I4 y in [-1.5, 1.5],
/// x - y in [0.5, 2.5].
Point2 sample_class_point(ClassTag tag, std::mt19937_64& rng);

/// Runs every identity of the catalog, the deformation and the invariants at
/// seeded random points for each z, plus the tabulated-form conformance rows.
VerificationReport verify(ClassTag tag, const std::vector<double>& z_list, std::uint64_t seed,
                          const VerifyOptions& options = {});

/// Fixed-format table, byte-identical for identical inputs.
void write_report(std::ostream& out, const VerificationReport& report);

/// LHDEF_TOL_SCALE from the environment (default 1). Throws ConfigError on
/// an unparsable or non-positive value.
double tolerance_scale_from_env();

}  // namespace lhdef

#endif  // LHDEF_VERIFICATION_HPP
