#ifndef LHDEF_INVARIANTS_HPP
#define LHDEF_INVARIANTS_HPP

#include <array>

#include "lhdef/deformation.hpp"
#include "lhdef/fields.hpp"
#include "lhdef/geometry.hpp"

namespace lhdef {

/// F_z = shc(2z h_{z,1}) h_{z,1} h_{z,3} - h_{z,2}^2, identically c/4.
ScalarField2D casimir_level(const DeformedSystem& dsys);

/// Lifted Hamiltonians on R^2 x R^2 through the deformed coproduct:
///   h1^(2) = h_{z,1}(p1) + h_{z,1}(p2)
///   hk^(2) = h_{z,k}(p1) exp(2z h_{z,1}(p2)) + exp(-2z h_{z,1}(p1)) h_{z,k}(p2),  k = 2, 3.
/// Jets of all three at one point, sharing the copy-wise evaluations.
std::array<Jet<4>, 3> lifted_hamiltonians_at(const DeformedSystem& dsys, const Point<4>& p);

std::array<TwoCopyField, 3> two_copy_lift(const DeformedSystem& dsys);

/// F_z^(2) = shc(2z h1^(2)) h1^(2) h3^(2) - (h2^(2))^2.
TwoCopyField coupled_invariant(const DeformedSystem& dsys);

/// Both copies inside the class domain.
Domain<4> two_copy_domain(const Sl2ClassSystem& sys);

/// {f, g} for the product form w(p1) dx1^dy1 + w(p2) dx2^dy2.
TwoCopyField product_bracket(const TwoCopyField& f, const TwoCopyField& g,
                             const SymplecticForm2D& omega);

/// Hamiltonian vector field of a two-copy function for the product form, at p.
Point<4> product_hamiltonian_vector(const Jet<4>& H, const SymplecticForm2D& omega,
                                    const Point<4>& p);

}  // namespace lhdef

#endif  // LHDEF_INVARIANTS_HPP
