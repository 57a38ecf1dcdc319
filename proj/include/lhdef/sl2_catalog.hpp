#ifndef LHDEF_SL2_CATALOG_HPP
#define LHDEF_SL2_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "lhdef/fields.hpp"
#include "lhdef/geometry.hpp"

namespace lhdef {

/// The three non-diffeomorphic planar realizations of sl(2) by Hamiltonian
/// vector fields, distinguished by the sign of the Casimir constant c.
enum class ClassTag { P2, I4, I5 };

std::string to_string(ClassTag tag);
/// Accepts "P2", "I4", "I5" (case-insensitive). Throws ConfigError otherwise.
ClassTag parse_class_tag(std::string_view text);
/// 4, -1 and 0 respectively.
double default_casimir(ClassTag tag);

/// A classical sl(2) Lie-Hamilton system on the plane.
///
/// Invariants: {h1,h2} = -h1, {h1,h3} = -2 h2, {h2,h3} = -h3 under the
/// bracket of `omega`; h1 h3 - h2^2 = c/4; X_i is the Hamiltonian field of
/// h_i; h1 never vanishes on `domain`.
struct Sl2ClassSystem {
  ClassTag tag;
  double c;
  double guard;
  SymplecticForm2D omega;
  std::array<ScalarField2D, 3> h;
  std::array<VectorField2D, 3> X;
  Domain<2> domain;
};

/// Builds the class record. Without an override c takes the class default;
/// an override must have the sign of the class (P2: c > 0, I4: c < 0, I5: c = 0)
/// or ConfigError is thrown. h3 always equals h2^2/h1 + c/(4 h1).
///
/// Domains are fixed connected components: y > guard for P2 and I5,
/// x - y > guard for I4.
Sl2ClassSystem make_class(ClassTag tag, std::optional<double> c_override = std::nullopt,
                          double guard = kDefaultGuard);

/// Linear coordinates on sl(2)*.
struct Sl2DualPoint {
  double v1;
  double v2;
  double v3;
};

struct DarbouxCoordinates {
  double x;
  double y;
  double casimir;
};

/// (v1, v2, v3) -> (v1, -v2/v1, v1 v3 - v2^2), defined for v1 != 0.
DarbouxCoordinates to_darboux(const Sl2DualPoint& v);
Sl2DualPoint from_darboux(const DarbouxCoordinates& d);

/// The coordinate functions v1, v2, v3 as fields on R^3.
std::array<ScalarField3D, 3> dual_coordinates();
/// C = v1 v3 - v2^2.
ScalarField3D dual_casimir();

/// Kostant-Kirillov-Souriau bracket Lambda(df, dg) with
/// Lambda = -v1 d1^d2 - 2 v2 d1^d3 - v3 d2^d3.
ScalarField3D kks_bracket(const ScalarField3D& f, const ScalarField3D& g);

/// (x, -x y, c/(4x) + x y^2) on x != 0 (|x| > guard): a Lie algebra morphism
/// into the canonical plane bracket whose constraint value is c/4.
std::array<ScalarField2D, 3> foliation_realization(double c, double guard = kDefaultGuard);

/// v_{z,1} = v1, v_{z,2} = shc(2 z v1) v2,
/// v_{z,3} = shc(2 z v1) v2^2 / v1 + c / (4 shc(2 z v1) v1), on |v1| > guard.
std::array<ScalarField3D, 3> deformed_dual_functions(double z, double c,
                                                     double guard = kDefaultGuard);

}  // namespace lhdef

#endif  // LHDEF_SL2_CATALOG_HPP
