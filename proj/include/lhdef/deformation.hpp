#ifndef LHDEF_DEFORMATION_HPP
#define LHDEF_DEFORMATION_HPP

#include <array>
#include <cstddef>

#include "lhdef/fields.hpp"
#include "lhdef/jet.hpp"
#include "lhdef/sl2_catalog.hpp"

namespace lhdef {

/// The deformed triple (h1, shc(2 z h1) h2, shc(2 z h1) h2^2/h1 + c/(4 shc(2 z h1) h1))
/// for jets over any number of variables. Shared by the plane realization and
/// the functions on sl(2)*.
template <std::size_t N>
std::array<Jet<N>, 3> deformed_triple(const Jet<N>& h1, const Jet<N>& h2, double z, double c) {
  const Jet<N> s = shc(2.0 * z * h1);
  return {h1, s * h2, s * sqr(h2) / h1 + c / (4.0 * (s * h1))};
}

/// Output of the deformation for one (system, z) pair.
struct DeformedSystem {
  Sl2ClassSystem base;
  double z;
  std::array<ScalarField2D, 3> h;
  std::array<VectorField2D, 3> X;
};

/// h_z from the classical (h1, h2) of `sys`; derivatives by the jet chain rule.
std::array<ScalarField2D, 3> deform_hamiltonians(const Sl2ClassSystem& sys, double z);

/// Closed-form deformed fields written on the classical basis X1, X2.
std::array<VectorField2D, 3> deform_vector_fields(const Sl2ClassSystem& sys, double z);

/// The independent route: Hamiltonian vector fields of deform_hamiltonians.
std::array<VectorField2D, 3> deformed_fields_from_symplectic(const Sl2ClassSystem& sys, double z);

/// h from deform_hamiltonians, X from deform_vector_fields.
DeformedSystem deform(const Sl2ClassSystem& sys, double z);

/// Right-hand sides (F12, F13, F23) = (-shc(2z h1) h1, -2 h2, -ch(2z h1) h3)
/// evaluated on the deformed Hamiltonians.
std::array<ScalarField2D, 3> structure_functions(const Sl2ClassSystem& sys, double z);

/// Predicted [X_{z,1},X_{z,2}], [X_{z,1},X_{z,3}], [X_{z,2},X_{z,3}], obtained as
/// -sum_k dF_ij/dh_k X_{z,k}:
///   ch(2z h1) X1;  2 X2;  ch(2z h1) X3 + 4 z^2 shc(2z h1) h1 h3 X1.
std::array<VectorField2D, 3> predicted_commutators(const Sl2ClassSystem& sys, double z);

/// The [X_{z,2},X_{z,3}] right-hand side with the X1 coefficient squared in shc,
/// as it is usually printed. Kept only to measure its discrepancy.
VectorField2D printed_x23_commutator(const Sl2ClassSystem& sys, double z);

}  // namespace lhdef

#endif  // LHDEF_DEFORMATION_HPP
