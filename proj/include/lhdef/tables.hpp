#ifndef LHDEF_TABLES_HPP
#define LHDEF_TABLES_HPP

#include <array>

#include "lhdef/fields.hpp"
#include "lhdef/sl2_catalog.hpp"

namespace lhdef {

// Literal closed forms of the tabulated classical and deformed data for the
// default Casimir constant of each class. They are cross-checks only: the
// generic construction is authoritative, and every entry is transcribed as
// published, including any misprint.

/// Tabulated F: 1, -1/4, 0.
double tabulated_casimir_level(ClassTag tag);

/// Classical coupled invariant F^(2).
TwoCopyField tabulated_coupled_invariant(ClassTag tag, double guard = kDefaultGuard);

/// Deformed coupled invariant F_z^(2).
TwoCopyField tabulated_deformed_coupled_invariant(ClassTag tag, double z,
                                                  double guard = kDefaultGuard);

std::array<ScalarField2D, 3> tabulated_deformed_hamiltonians(ClassTag tag, double z,
                                                             double guard = kDefaultGuard);

std::array<VectorField2D, 3> tabulated_deformed_fields(ClassTag tag, double z,
                                                       double guard = kDefaultGuard);

}  // namespace lhdef

#endif  // LHDEF_TABLES_HPP
