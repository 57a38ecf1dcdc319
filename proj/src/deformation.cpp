#include "lhdef/deformation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lhdef/geometry.hpp"

namespace lhdef {

namespace {

using Triple = std::array<Jet<2>, 3>;
using Components = VectorField2D::Components;

void require_finite_z(double z) {
  if (!std::isfinite(z)) throw std::invalid_argument("deformation parameter must be finite");
}

Triple hamiltonians_at(const Sl2ClassSystem& sys, double z, const Point2& p) {
  return deformed_triple(sys.h[0].jet(p), sys.h[1].jet(p), z, sys.c);
}

Components scaled_sum(const Jet<2>& a, const Components& u, const Jet<2>& b, const Components& v) {
  return {a * u[0] + b * v[0], a * u[1] + b * v[1]};
}

std::array<Components, 3> closed_form_fields_at(const Sl2ClassSystem& sys, double z,
                                                const Point2& p) {
  const Jet<2> h1 = sys.h[0].jet(p), h2 = sys.h[1].jet(p);
  const Components x1 = sys.X[0].components(p), x2 = sys.X[1].components(p);
  const Jet<2> u = 2.0 * z * h1;
  const Jet<2> s = shc(u), c = cosh(u);
  const Jet<2> ratio = h2 / h1;
  const Jet<2> a2 = ratio * (c - s);
  const Jet<2> a3 = sqr(ratio) * (c - 2.0 * s) - sys.c * c / (4.0 * sqr(h1 * s));
  return {x1, scaled_sum(a2, x1, s, x2), scaled_sum(a3, x1, 2.0 * ratio * s, x2)};
}

std::string tag(const Sl2ClassSystem& sys, double z) {
  return to_string(sys.tag) + "[z=" + std::to_string(z) + "]";
}

}  // namespace

std::array<ScalarField2D, 3> deform_hamiltonians(const Sl2ClassSystem& sys, double z) {
  require_finite_z(z);
  if (z == 0.0) return sys.h;
  std::array<ScalarField2D, 3> out{
      ScalarField2D([sys, z](const Point2& p) { return hamiltonians_at(sys, z, p)[0]; }, sys.domain,
                    tag(sys, z) + ".h_z1"),
      ScalarField2D([sys, z](const Point2& p) { return hamiltonians_at(sys, z, p)[1]; }, sys.domain,
                    tag(sys, z) + ".h_z2"),
      ScalarField2D([sys, z](const Point2& p) { return hamiltonians_at(sys, z, p)[2]; }, sys.domain,
                    tag(sys, z) + ".h_z3")};
  return out;
}

std::array<VectorField2D, 3> deform_vector_fields(const Sl2ClassSystem& sys, double z) {
  require_finite_z(z);
  if (z == 0.0) return sys.X;
  std::array<VectorField2D, 3> out{
      VectorField2D([sys, z](const Point2& p) { return closed_form_fields_at(sys, z, p)[0]; },
                    sys.domain, tag(sys, z) + ".X_z1"),
      VectorField2D([sys, z](const Point2& p) { return closed_form_fields_at(sys, z, p)[1]; },
                    sys.domain, tag(sys, z) + ".X_z2"),
      VectorField2D([sys, z](const Point2& p) { return closed_form_fields_at(sys, z, p)[2]; },
                    sys.domain, tag(sys, z) + ".X_z3")};
  return out;
}

std::array<VectorField2D, 3> deformed_fields_from_symplectic(const Sl2ClassSystem& sys, double z) {
  const auto h = deform_hamiltonians(sys, z);
  return {hamiltonian_vector_field(h[0], sys.omega), hamiltonian_vector_field(h[1], sys.omega),
          hamiltonian_vector_field(h[2], sys.omega)};
}

DeformedSystem deform(const Sl2ClassSystem& sys, double z) {
  return DeformedSystem{sys, z, deform_hamiltonians(sys, z), deform_vector_fields(sys, z)};
}

std::array<ScalarField2D, 3> structure_functions(const Sl2ClassSystem& sys, double z) {
  require_finite_z(z);
  const auto rhs = [sys, z](std::size_t k) {
    return [sys, z, k](const Point2& p) {
      const Triple h = hamiltonians_at(sys, z, p);
      const Jet<2> u = 2.0 * z * h[0];
      switch (k) {
        case 0: return -(shc(u) * h[0]);
        case 1: return -2.0 * h[1];
        default: return -(cosh(u) * h[2]);
      }
    };
  };
  return {ScalarField2D(rhs(0), sys.domain, tag(sys, z) + ".F12"),
          ScalarField2D(rhs(1), sys.domain, tag(sys, z) + ".F13"),
          ScalarField2D(rhs(2), sys.domain, tag(sys, z) + ".F23")};
}

namespace {

Components commutator_rhs(const Sl2ClassSystem& sys, double z, const Point2& p, std::size_t k,
                          int shc_power) {
  const Triple h = hamiltonians_at(sys, z, p);
  const auto X = closed_form_fields_at(sys, z, p);
  const Jet<2> u = 2.0 * z * h[0];
  switch (k) {
    case 0: return scaled_sum(cosh(u), X[0], Jet<2>::constant(0.0), X[0]);
    case 1: return scaled_sum(Jet<2>::constant(2.0), X[1], Jet<2>::constant(0.0), X[1]);
    default: {
      Jet<2> s = shc(u);
      if (shc_power == 2) s = sqr(s);
      return scaled_sum(cosh(u), X[2], 4.0 * z * z * s * h[0] * h[2], X[0]);
    }
  }
}

}  // namespace

std::array<VectorField2D, 3> predicted_commutators(const Sl2ClassSystem& sys, double z) {
  require_finite_z(z);
  const auto rhs = [sys, z](std::size_t k) {
    return [sys, z, k](const Point2& p) { return commutator_rhs(sys, z, p, k, 1); };
  };
  return {VectorField2D(rhs(0), sys.domain, tag(sys, z) + ".[X_z1,X_z2]"),
          VectorField2D(rhs(1), sys.domain, tag(sys, z) + ".[X_z1,X_z3]"),
          VectorField2D(rhs(2), sys.domain, tag(sys, z) + ".[X_z2,X_z3]")};
}

VectorField2D printed_x23_commutator(const Sl2ClassSystem& sys, double z) {
  require_finite_z(z);
  return VectorField2D([sys, z](const Point2& p) { return commutator_rhs(sys, z, p, 2, 2); },
                       sys.domain, tag(sys, z) + ".[X_z2,X_z3](shc^2)");
}

}  // namespace lhdef
