#include "lhdef/special.hpp"

#include <cmath>
#include <stdexcept>

namespace lhdef {

namespace {

// Below this |xi| shc uses its even Taylor polynomial; the truncation error
// of the four retained terms is below 1e-18 there.
constexpr double kShcSeriesThreshold = 1e-2;

// The derivatives lose ~1/xi^2 digits to cancellation in closed form, so
// they switch to the series much later.
constexpr double kDerivativeSeriesThreshold = 0.5;
constexpr int kDerivativeSeriesTerms = 12;

void require_finite(double xi) {
  if (!std::isfinite(xi)) throw std::invalid_argument("shc: non-finite argument");
}

}  // namespace

double shc(double xi) {
  require_finite(xi);
  if (std::abs(xi) < kShcSeriesThreshold) {
    const double s = xi * xi;
    return 1.0 + s * (1.0 / 6.0 + s * (1.0 / 120.0 + s * (1.0 / 5040.0)));
  }
  return std::sinh(xi) / xi;
}

double ch(double xi) {
  require_finite(xi);
  return std::cosh(xi);
}

ShcDerivatives shc_derivatives(double xi) {
  const double value = shc(xi);
  if (std::abs(xi) < kDerivativeSeriesThreshold) {
    // shc = sum_k xi^(2k) / (2k+1)!
    double first = 0.0, second = 0.0;
    double inv_fact = 1.0;  // 1/(2k+1)!
    for (int k = 1; k <= kDerivativeSeriesTerms; ++k) {
      inv_fact /= (2.0 * k) * (2.0 * k + 1.0);
      first += 2.0 * k * std::pow(xi, 2 * k - 1) * inv_fact;
      second += 2.0 * k * (2.0 * k - 1.0) * std::pow(xi, 2 * k - 2) * inv_fact;
    }
    return {value, first, second};
  }
  const double c = std::cosh(xi);
  const double first = (c - value) / xi;
  const double second = (std::sinh(xi) - 2.0 * first) / xi;
  return {value, first, second};
}

}  // namespace lhdef
