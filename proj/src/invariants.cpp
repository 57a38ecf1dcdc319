#include "lhdef/invariants.hpp"

#include <cmath>
#include <string>

namespace lhdef {

namespace {

Point2 copy(const Point<4>& p, std::size_t k) { return {p[2 * k], p[2 * k + 1]}; }

}  // namespace

ScalarField2D casimir_level(const DeformedSystem& dsys) {
  const double z = dsys.z;
  const auto h = dsys.h;
  return ScalarField2D(
      [h, z](const Point2& p) {
        const Jet<2> h1 = h[0].jet(p), h2 = h[1].jet(p), h3 = h[2].jet(p);
        return shc(2.0 * z * h1) * h1 * h3 - sqr(h2);
      },
      dsys.base.domain, "F_z");
}

Domain<4> two_copy_domain(const Sl2ClassSystem& sys) {
  return [d = sys.domain](const Point<4>& p) { return d(copy(p, 0)) && d(copy(p, 1)); };
}

std::array<Jet<4>, 3> lifted_hamiltonians_at(const DeformedSystem& dsys, const Point<4>& p) {
  const Point2 p1 = copy(p, 0), p2 = copy(p, 1);
  std::array<Jet<4>, 3> a, b;
  for (std::size_t k = 0; k < 3; ++k) {
    a[k] = embed<4>(dsys.h[k].jet(p1), 0);
    b[k] = embed<4>(dsys.h[k].jet(p2), 2);
  }
  const double z = dsys.z;
  const Jet<4> right = exp(2.0 * z * b[0]);
  const Jet<4> left = exp(-2.0 * z * a[0]);
  return {a[0] + b[0], a[1] * right + left * b[1], a[2] * right + left * b[2]};
}

std::array<TwoCopyField, 3> two_copy_lift(const DeformedSystem& dsys) {
  const Domain<4> domain = two_copy_domain(dsys.base);
  const auto component = [dsys](std::size_t k) {
    return [dsys, k](const Point<4>& p) { return lifted_hamiltonians_at(dsys, p)[k]; };
  };
  return {TwoCopyField(component(0), domain, "h_z1^(2)"),
          TwoCopyField(component(1), domain, "h_z2^(2)"),
          TwoCopyField(component(2), domain, "h_z3^(2)")};
}

TwoCopyField coupled_invariant(const DeformedSystem& dsys) {
  return TwoCopyField(
      [dsys](const Point<4>& p) {
        const auto L = lifted_hamiltonians_at(dsys, p);
        return shc(2.0 * dsys.z * L[0]) * L[0] * L[2] - sqr(L[1]);
      },
      two_copy_domain(dsys.base), "F_z^(2)");
}

TwoCopyField product_bracket(const TwoCopyField& f, const TwoCopyField& g,
                             const SymplecticForm2D& omega) {
  return TwoCopyField(
      [f, g, omega](const Point<4>& p) {
        const Jet<4> a = f.jet(p), b = g.jet(p);
        Jet<4> out;
        for (std::size_t k = 0; k < 2; ++k) {
          const Jet<4> w = embed<4>(omega.weight.jet(copy(p, k)), 2 * k);
          const std::size_t ix = 2 * k, iy = 2 * k + 1;
          out += (partial(a, ix) * partial(b, iy) - partial(a, iy) * partial(b, ix)) / w;
        }
        return out;
      },
      intersect(f.domain(), g.domain()), "{" + f.name() + "," + g.name() + "}^(2)");
}

Point<4> product_hamiltonian_vector(const Jet<4>& H, const SymplecticForm2D& omega,
                                    const Point<4>& p) {
  Point<4> out{};
  for (std::size_t k = 0; k < 2; ++k) {
    const double w = omega.weight.eval(copy(p, k));
    out[2 * k] = H.g[2 * k + 1] / w;
    out[2 * k + 1] = -H.g[2 * k] / w;
  }
  return out;
}

}  // namespace lhdef
