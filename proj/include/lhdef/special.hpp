#ifndef LHDEF_SPECIAL_HPP
#define LHDEF_SPECIAL_HPP

namespace lhdef {

/// Cardinal hyperbolic sine, sinh(xi)/xi with shc(0) = 1.
/// Throws std::invalid_argument for non-finite input.
double shc(double xi);

/// Hyperbolic cosine with the same finiteness check as shc.
double ch(double xi);

struct ShcDerivatives {
  double value;
  double first;
  double second;
};

/// shc together with its first and second derivatives.
ShcDerivatives shc_derivatives(double xi);

}  // namespace lhdef

#endif  // LHDEF_SPECIAL_HPP
