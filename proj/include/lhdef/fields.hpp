#ifndef LHDEF_FIELDS_HPP
#define LHDEF_FIELDS_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "lhdef/errors.hpp"
#include "lhdef/jet.hpp"

namespace lhdef {

template <std::size_t N>
using Point = std::array<double, N>;
using Point2 = Point<2>;
using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

template <std::size_t N>
using Domain = std::function<bool(const Point<N>&)>;

template <std::size_t N>
Domain<N> everywhere() {
  return [](const Point<N>&) { return true; };
}

template <std::size_t N>
Domain<N> intersect(Domain<N> a, Domain<N> b) {
  return [a = std::move(a), b = std::move(b)](const Point<N>& p) { return a(p) && b(p); };
}

/// Default guard band: points whose singular denominator is smaller than this
/// in magnitude are outside every class domain.
inline constexpr double kDefaultGuard = 1e-8;

std::string format_point(const double* p, std::size_t n);

/// Smooth real function on an open subset of R^N together with its analytic
/// derivatives. Values are immutable; copies share the evaluator.
template <std::size_t N>
class ScalarField {
 public:
  using Evaluator = std::function<Jet<N>(const Point<N>&)>;

  ScalarField(Evaluator evaluator, Domain<N> domain, std::string name = {})
      : evaluator_(std::move(evaluator)), domain_(std::move(domain)), name_(std::move(name)) {}

  bool contains(const Point<N>& p) const { return domain_(p); }
  const Domain<N>& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  Jet<N> jet(const Point<N>& p) const {
    if (!domain_(p))
      throw DomainError("field '" + name_ + "' evaluated outside its domain at " +
                        format_point(p.data(), N));
    return evaluator_(p);
  }
  double eval(const Point<N>& p) const { return jet(p).v; }
  double operator()(const Point<N>& p) const { return eval(p); }
  std::array<double, N> grad(const Point<N>& p) const { return jet(p).g; }

 private:
  Evaluator evaluator_;
  Domain<N> domain_;
  std::string name_;
};

using ScalarField2D = ScalarField<2>;
using ScalarField3D = ScalarField<3>;
/// Function on the two-copy manifold R^2 x R^2, coordinates (x1, y1, x2, y2).
using TwoCopyField = ScalarField<4>;

/// Smooth planar vector field; each component is a jet, so the Jacobian is
/// the pair of component gradients.
class VectorField2D {
 public:
  using Components = std::array<Jet<2>, 2>;
  using Evaluator = std::function<Components(const Point2&)>;

  VectorField2D(Evaluator evaluator, Domain<2> domain, std::string name = {})
      : evaluator_(std::move(evaluator)), domain_(std::move(domain)), name_(std::move(name)) {}

  bool contains(const Point2& p) const { return domain_(p); }
  const Domain<2>& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  Components components(const Point2& p) const {
    if (!domain_(p))
      throw DomainError("vector field '" + name_ + "' evaluated outside its domain at " +
                        format_point(p.data(), 2));
    return evaluator_(p);
  }
  Vec2 eval(const Point2& p) const {
    const auto c = components(p);
    return {c[0].v, c[1].v};
  }
  Vec2 operator()(const Point2& p) const { return eval(p); }
  /// Row k holds the gradient of component k.
  Mat2 jacobian(const Point2& p) const {
    const auto c = components(p);
    return {{{c[0].g[0], c[0].g[1]}, {c[1].g[0], c[1].g[1]}}};
  }

 private:
  Evaluator evaluator_;
  Domain<2> domain_;
  std::string name_;
};

/// Coordinate jets (x, y) at a planar point.
inline std::pair<Jet<2>, Jet<2>> coordinates(const Point2& p) {
  return {Jet<2>::variable(p[0], 0), Jet<2>::variable(p[1], 1)};
}

}  // namespace lhdef

#endif  // LHDEF_FIELDS_HPP
