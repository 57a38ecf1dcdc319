#include "lhdef/geometry.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace lhdef {

std::string format_point(const double* p, std::size_t n) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", p[i]);
    out += buf;
    if (i + 1 < n) out += ", ";
  }
  return out + ")";
}

SymplecticForm2D canonical_form() {
  ScalarField2D unit([](const Point2&) { return Jet<2>::constant(1.0); }, everywhere<2>(), "1");
  return {unit, everywhere<2>()};
}

VectorField2D hamiltonian_vector_field(const ScalarField2D& h, const SymplecticForm2D& omega) {
  auto domain = intersect(h.domain(), omega.domain);
  return VectorField2D(
      [h, omega](const Point2& p) {
        const Jet<2> hj = h.jet(p);
        const Jet<2> inv_w = reciprocal(omega.weight.jet(p));
        return VectorField2D::Components{partial(hj, 1) * inv_w, -(partial(hj, 0) * inv_w)};
      },
      std::move(domain), "X[" + h.name() + "]");
}

ScalarField2D poisson_bracket(const ScalarField2D& f, const ScalarField2D& g,
                              const SymplecticForm2D& omega) {
  auto domain = intersect(intersect(f.domain(), g.domain()), omega.domain);
  return ScalarField2D(
      [f, g, omega](const Point2& p) {
        const Jet<2> fj = f.jet(p), gj = g.jet(p);
        const Jet<2> num = partial(fj, 0) * partial(gj, 1) - partial(fj, 1) * partial(gj, 0);
        return num / omega.weight.jet(p);
      },
      std::move(domain), "{" + f.name() + "," + g.name() + "}");
}

VectorField2D lie_bracket(const VectorField2D& X, const VectorField2D& Y) {
  auto domain = intersect(X.domain(), Y.domain());
  return VectorField2D(
      [X, Y](const Point2& p) {
        const auto xc = X.components(p), yc = Y.components(p);
        VectorField2D::Components out;
        for (std::size_t k = 0; k < 2; ++k) {
          Jet<2> acc;
          for (std::size_t j = 0; j < 2; ++j)
            acc += partial(yc[k], j) * xc[j] - partial(xc[k], j) * yc[j];
          out[k] = acc;
        }
        return out;
      },
      std::move(domain), "[" + X.name() + "," + Y.name() + "]");
}

VectorField2D combine(const std::array<ScalarField2D, 3>& coefficients,
                      const std::array<VectorField2D, 3>& fields, std::string name) {
  Domain<2> domain = everywhere<2>();
  for (std::size_t i = 0; i < 3; ++i)
    domain = intersect(intersect(domain, coefficients[i].domain()), fields[i].domain());
  return VectorField2D(
      [coefficients, fields](const Point2& p) {
        VectorField2D::Components out;
        for (std::size_t i = 0; i < 3; ++i) {
          const Jet<2> a = coefficients[i].jet(p);
          const auto f = fields[i].components(p);
          out[0] += a * f[0];
          out[1] += a * f[1];
        }
        return out;
      },
      std::move(domain), std::move(name));
}

Mat2 fd_jacobian(const VectorField2D& X, const Point2& p, double step) {
  Mat2 J{};
  for (std::size_t j = 0; j < 2; ++j) {
    Point2 plus = p, minus = p;
    plus[j] += step;
    minus[j] -= step;
    const Vec2 a = X.eval(plus), b = X.eval(minus);
    for (std::size_t k = 0; k < 2; ++k) J[k][j] = (a[k] - b[k]) / (2.0 * step);
  }
  return J;
}

double fd_bracket_oracle(const ScalarField2D& f, const ScalarField2D& g,
                         const SymplecticForm2D& omega, const Point2& p, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_bracket_oracle: step must be positive");
  if (!omega.domain(p)) throw DomainError("fd_bracket_oracle: point outside symplectic domain");
  const auto df = fd_gradient(f, p, step);
  const auto dg = fd_gradient(g, p, step);
  return (df[0] * dg[1] - df[1] * dg[0]) / omega.weight.eval(p);
}

}  // namespace lhdef
