#include "lhdef/tables.hpp"

#include <cmath>



namespace lhdef {

namespace {

using J2 = Jet<2>;
using J4 = Jet<4>;
using Pair = VectorField2D::Components;

// The printed formulas make sense wherever their denominators are nonzero,
// on either side of the singular line.
Domain<2> class_domain(ClassTag tag, double guard) {
  if (tag == ClassTag::I4)
    return [guard](const Point2& p) { return std::abs(p[0] - p[1]) > guard; };
  return [guard](const Point2& p) { return std::abs(p[1]) > guard; };
}

Domain<4> pair_domain(ClassTag tag, double guard) {
  return [d = class_domain(tag, guard)](const Point<4>& p) {
    return d({p[0], p[1]}) && d({p[2], p[3]});
  };
}

struct Coords4 {
  J4 x1, y1, x2, y2;
};

Coords4 coords4(const Point<4>& p) {
  return {J4::variable(p[0], 0), J4::variable(p[1], 1), J4::variable(p[2], 2),
          J4::variable(p[3], 3)};
}

// The deformation argument 2 z h1 written per class (P2: 2z/y, I4: 2z/(x-y), I5: z/y^2).
J2 argument(ClassTag tag, double z, const J2& x, const J2& y) {
  switch (tag) {
    case ClassTag::P2: return 2.0 * z / y;
    case ClassTag::I4: return 2.0 * z / (x - y);
    case ClassTag::I5: return z / sqr(y);
  }
  return J2{};
}

}  // namespace

double tabulated_casimir_level(ClassTag tag) {
  switch (tag) {
    case ClassTag::P2: return 1.0;
    case ClassTag::I4: return -0.25;
    case ClassTag::I5: return 0.0;
  }
  return 0.0;
}

TwoCopyField tabulated_coupled_invariant(ClassTag tag, double guard) {
  return TwoCopyField(
      [tag](const Point<4>& p) {
        const auto [x1, y1, x2, y2] = coords4(p);
        switch (tag) {
          case ClassTag::P2: return (sqr(x1 - x2) + sqr(y1 + y2)) / (y1 * y2);
          case ClassTag::I4: return -((x2 - y1) * (x1 - y2)) / ((x1 - y1) * (x2 - y2));
          case ClassTag::I5: return sqr(x1 - x2) / (4.0 * sqr(y1) * sqr(y2));
        }
        return J4{};
      },
      pair_domain(tag, guard), "table F^(2)");
}

TwoCopyField tabulated_deformed_coupled_invariant(ClassTag tag, double z, double guard) {
  return TwoCopyField(
      [tag, z](const Point<4>& p) {
        const auto [x1, y1, x2, y2] = coords4(p);
        switch (tag) {
          case ClassTag::P2: {
            const J4 u1 = 2.0 * z / y1, u2 = 2.0 * z / y2;
            const J4 e = exp(u1) * exp(-u2);
            return sqr(x1 - x2) / (y1 * y2) * shc(u1) * shc(u2) * e +
                   sqr(y1 + y2) / (y1 * y2) * sqr(shc(u1 + u2)) / (shc(u1) * shc(u2)) * e;
          }
          case ClassTag::I4: {
            const J4 d1 = x1 - y1, d2 = x2 - y2;
            const J4 u1 = 2.0 * z / d1, u2 = 2.0 * z / d2;
            const J4 first = sqr(x1 - x2 + y1 - y2) / (4.0 * d1 * d2) * shc(u1) * shc(u2) *
                             exp(-u1) * exp(u2);
            const J4 bracket = exp(u2) * d1 / shc(u1) + exp(-u1) * d2 / shc(u2);
            return first - (x1 + x2 - y1 - y2) * shc(u1 + u2) / (4.0 * d1 * d2) * bracket;
          }
          case ClassTag::I5: {
            const J4 u1 = z / sqr(y1), u2 = z / sqr(y2);
            return sqr(x1 - x2) / (4.0 * sqr(y1) * sqr(y2)) * shc(u1) * shc(u2) * exp(u1) *
                   exp(-u2);
          }
        }
        return J4{};
      },
      pair_domain(tag, guard), "table F_z^(2)");
}

std::array<ScalarField2D, 3> tabulated_deformed_hamiltonians(ClassTag tag, double z,
                                                             double guard) {
  const auto all = [tag, z](const Point2& p) -> std::array<J2, 3> {
    auto [x, y] = coordinates(p);
    const J2 s = shc(argument(tag, z, x, y));
    switch (tag) {
      case ClassTag::P2:
        return {-1.0 / y, -x / y * s, -(sqr(x) * sqr(s) + sqr(y)) / (y * s)};
      case ClassTag::I4: {
        const J2 d = x - y;
        return {1.0 / d, (x + y) * s / (2.0 * d),
                (sqr(x + y) * sqr(s) - sqr(d)) / (4.0 * d * s)};
      }
      case ClassTag::I5: {
        const J2 y2 = 2.0 * sqr(y);
        return {-1.0 / y2, -x / y2 * s, -sqr(x) / y2 * s};
      }
    }
    return {};
  };
  const Domain<2> domain = class_domain(tag, guard);
  return {ScalarField2D([all](const Point2& p) { return all(p)[0]; }, domain, "table h_z1"),
          ScalarField2D([all](const Point2& p) { return all(p)[1]; }, domain, "table h_z2"),
          ScalarField2D([all](const Point2& p) { return all(p)[2]; }, domain, "table h_z3")};
}

std::array<VectorField2D, 3> tabulated_deformed_fields(ClassTag tag, double z, double guard) {
  const auto all = [tag, z](const Point2& p) -> std::array<Pair, 3> {
    auto [x, y] = coordinates(p);
    const J2 u = argument(tag, z, x, y);
    const J2 s = shc(u), c = cosh(u);
    const J2 one = J2::constant(1.0), zero = J2::constant(0.0);
    switch (tag) {
      case ClassTag::P2:
        return {Pair{one, zero}, Pair{x * c, y * s},
                Pair{(sqr(x) - sqr(y) / sqr(s)) * c, 2.0 * x * y * s}};
      case ClassTag::I4: {
        // Coefficients of (d/dx + d/dy) and (d/dx - d/dy).
        const J2 a2 = 0.5 * (x + y) * c, b2 = 0.5 * (x - y) * s;
        const J2 a3 = 0.25 * c * (sqr(x + y) + sqr(x - y) / sqr(s));
        const J2 b3 = 0.5 * sqr(x - y) * s;
        return {Pair{one, one}, Pair{a2 + b2, a2 - b2}, Pair{a3 + b3, a3 - b3}};
      }
      case ClassTag::I5:
        return {Pair{one, zero}, Pair{x * c, 0.5 * y * s}, Pair{sqr(x) * c, x * y * s}};
    }
    return {};
  };
  const Domain<2> domain = class_domain(tag, guard);
  return {VectorField2D([all](const Point2& p) { return all(p)[0]; }, domain, "table X_z1"),
          VectorField2D([all](const Point2& p) { return all(p)[1]; }, domain, "table X_z2"),
          VectorField2D([all](const Point2& p) { return all(p)[2]; }, domain, "table X_z3")};
}

}  // namespace lhdef
