#include "lhdef/sl2_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "lhdef/deformation.hpp"

namespace lhdef {

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::P2: return "P2";
    case ClassTag::I4: return "I4";
    case ClassTag::I5: return "I5";
  }
  return "?";
}

ClassTag parse_class_tag(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  if (upper == "P2") return ClassTag::P2;
  if (upper == "I4") return ClassTag::I4;
  if (upper == "I5") return ClassTag::I5;
  throw ConfigError("unknown class '" + std::string(text) + "' (expected P2, I4 or I5)");
}

double default_casimir(ClassTag tag) {
  switch (tag) {
    case ClassTag::P2: return 4.0;
    case ClassTag::I4: return -1.0;
    case ClassTag::I5: return 0.0;
  }
  return 0.0;
}

namespace {

using Triple = std::array<Jet<2>, 3>;
using FieldPair = std::array<Jet<2>, 2>;

struct ClassFormulas {
  std::function<Triple(const Point2&)> hamiltonians;
  std::function<std::array<FieldPair, 3>(const Point2&)> fields;
  std::function<Jet<2>(const Point2&)> weight;
  Domain<2> domain;
};

ClassFormulas formulas(ClassTag tag, double c, double guard) {
  const double q = c / 4.0;
  switch (tag) {
    case ClassTag::P2:
      return {
          [q](const Point2& p) {
            auto [x, y] = coordinates(p);
            return Triple{-1.0 / y, -x / y, -(sqr(x) + q * sqr(y)) / y};
          },
          [q](const Point2& p) {
            auto [x, y] = coordinates(p);
            const auto one = Jet<2>::constant(1.0), zero = Jet<2>::constant(0.0);
            return std::array<FieldPair, 3>{
                FieldPair{one, zero}, FieldPair{x, y},
                FieldPair{sqr(x) - q * sqr(y), 2.0 * x * y}};
          },
          [](const Point2& p) { return 1.0 / sqr(coordinates(p).second); },
          [guard](const Point2& p) { return p[1] > guard; }};
    case ClassTag::I4:
      // Written so that c = -1 reproduces the tabulated expressions literally.
      return {
          [q](const Point2& p) {
            auto [x, y] = coordinates(p);
            const Jet<2> d = x - y;
            return Triple{1.0 / d, (x + y) / (2.0 * d), x * y / d + (q + 0.25) * d};
          },
          [q](const Point2& p) {
            auto [x, y] = coordinates(p);
            const auto one = Jet<2>::constant(1.0);
            const Jet<2> shift = -(q + 0.25) * sqr(x - y);
            return std::array<FieldPair, 3>{FieldPair{one, one}, FieldPair{x, y},
                                            FieldPair{sqr(x) + shift, sqr(y) + shift}};
          },
          [](const Point2& p) {
            auto [x, y] = coordinates(p);
            return 1.0 / sqr(x - y);
          },
          [guard](const Point2& p) { return p[0] - p[1] > guard; }};
    case ClassTag::I5:
      return {
          [](const Point2& p) {
            auto [x, y] = coordinates(p);
            const Jet<2> y2 = 2.0 * sqr(y);
            return Triple{-1.0 / y2, -x / y2, -sqr(x) / y2};
          },
          [](const Point2& p) {
            auto [x, y] = coordinates(p);
            const auto one = Jet<2>::constant(1.0), zero = Jet<2>::constant(0.0);
            return std::array<FieldPair, 3>{FieldPair{one, zero}, FieldPair{x, 0.5 * y},
                                            FieldPair{sqr(x), x * y}};
          },
          [](const Point2& p) {
            const Jet<2> y = coordinates(p).second;
            return 1.0 / (y * sqr(y));
          },
          [guard](const Point2& p) { return p[1] > guard; }};
  }
  throw ConfigError("unknown class tag");
}

void check_casimir_sign(ClassTag tag, double c) {
  if (!std::isfinite(c)) throw ConfigError("Casimir constant must be finite");
  const bool ok = (tag == ClassTag::P2 && c > 0.0) || (tag == ClassTag::I4 && c < 0.0) ||
                  (tag == ClassTag::I5 && c == 0.0);
  if (!ok)
    throw ConfigError("Casimir constant " + std::to_string(c) + " has the wrong sign for class " +
                      to_string(tag) + " (P2: c > 0, I4: c < 0, I5: c = 0)");
}

}  // namespace

Sl2ClassSystem make_class(ClassTag tag, std::optional<double> c_override, double guard) {
  if (!(guard >= 0.0)) throw ConfigError("guard band must be non-negative");
  const double c = c_override.value_or(default_casimir(tag));
  check_casimir_sign(tag, c);
  const ClassFormulas f = formulas(tag, c, guard);
  const std::string cls = to_string(tag);

  SymplecticForm2D omega{ScalarField2D([w = f.weight](const Point2& p) { return w(p); },
                                       f.domain, cls + ".w"),
                         f.domain};
  std::array<ScalarField2D, 3> h{
      ScalarField2D([hs = f.hamiltonians](const Point2& p) { return hs(p)[0]; }, f.domain,
                    cls + ".h1"),
      ScalarField2D([hs = f.hamiltonians](const Point2& p) { return hs(p)[1]; }, f.domain,
                    cls + ".h2"),
      ScalarField2D([hs = f.hamiltonians](const Point2& p) { return hs(p)[2]; }, f.domain,
                    cls + ".h3")};
  std::array<VectorField2D, 3> X{
      VectorField2D([xs = f.fields](const Point2& p) { return xs(p)[0]; }, f.domain, cls + ".X1"),
      VectorField2D([xs = f.fields](const Point2& p) { return xs(p)[1]; }, f.domain, cls + ".X2"),
      VectorField2D([xs = f.fields](const Point2& p) { return xs(p)[2]; }, f.domain, cls + ".X3")};
  return Sl2ClassSystem{tag, c, guard, std::move(omega), std::move(h), std::move(X), f.domain};
}

DarbouxCoordinates to_darboux(const Sl2DualPoint& v) {
  if (v.v1 == 0.0) throw DomainError("Darboux chart requires v1 != 0");
  return {v.v1, -v.v2 / v.v1, v.v1 * v.v3 - v.v2 * v.v2};
}

Sl2DualPoint from_darboux(const DarbouxCoordinates& d) {
  if (d.x == 0.0) throw DomainError("Darboux chart requires x != 0");
  return {d.x, -d.x * d.y, (d.casimir + d.x * d.x * d.y * d.y) / d.x};
}

std::array<ScalarField3D, 3> dual_coordinates() {
  std::array<ScalarField3D, 3> out{
      ScalarField3D([](const Point<3>& p) { return Jet<3>::variable(p[0], 0); }, everywhere<3>(),
                    "v1"),
      ScalarField3D([](const Point<3>& p) { return Jet<3>::variable(p[1], 1); }, everywhere<3>(),
                    "v2"),
      ScalarField3D([](const Point<3>& p) { return Jet<3>::variable(p[2], 2); }, everywhere<3>(),
                    "v3")};
  return out;
}

ScalarField3D dual_casimir() {
  return ScalarField3D(
      [](const Point<3>& p) {
        const auto v1 = Jet<3>::variable(p[0], 0), v2 = Jet<3>::variable(p[1], 1),
                   v3 = Jet<3>::variable(p[2], 2);
        return v1 * v3 - sqr(v2);
      },
      everywhere<3>(), "C");
}

ScalarField3D kks_bracket(const ScalarField3D& f, const ScalarField3D& g) {
  return ScalarField3D(
      [f, g](const Point<3>& p) {
        const Jet<3> a = f.jet(p), b = g.jet(p);
        const auto wedge = [&](std::size_t i, std::size_t k) {
          return partial(a, i) * partial(b, k) - partial(a, k) * partial(b, i);
        };
        const auto v1 = Jet<3>::variable(p[0], 0), v2 = Jet<3>::variable(p[1], 1),
                   v3 = Jet<3>::variable(p[2], 2);
        return -(v1 * wedge(0, 1)) - 2.0 * (v2 * wedge(0, 2)) - v3 * wedge(1, 2);
      },
      intersect(f.domain(), g.domain()), "{" + f.name() + "," + g.name() + "}_KKS");
}

std::array<ScalarField2D, 3> foliation_realization(double c, double guard) {
  const Domain<2> domain = [guard](const Point2& p) { return std::abs(p[0]) > guard; };
  const double q = c / 4.0;
  return {ScalarField2D([](const Point2& p) { return coordinates(p).first; }, domain, "phi(v1)"),
          ScalarField2D(
              [](const Point2& p) {
                auto [x, y] = coordinates(p);
                return -(x * y);
              },
              domain, "phi(v2)"),
          ScalarField2D(
              [q](const Point2& p) {
                auto [x, y] = coordinates(p);
                return q / x + x * sqr(y);
              },
              domain, "phi(v3)")};
}

std::array<ScalarField3D, 3> deformed_dual_functions(double z, double c, double guard) {
  const Domain<3> domain = [guard](const Point<3>& p) { return std::abs(p[0]) > guard; };
  const auto component = [z, c](std::size_t k) {
    return [z, c, k](const Point<3>& p) {
      return deformed_triple(Jet<3>::variable(p[0], 0), Jet<3>::variable(p[1], 1), z, c)[k];
    };
  };
  return {ScalarField3D(component(0), domain, "v_z1"), ScalarField3D(component(1), domain, "v_z2"),
          ScalarField3D(component(2), domain, "v_z3")};
}

}  // namespace lhdef
