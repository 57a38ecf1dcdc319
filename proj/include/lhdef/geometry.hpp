#ifndef LHDEF_GEOMETRY_HPP
#define LHDEF_GEOMETRY_HPP

#include <array>
#include <cstddef>

#include "lhdef/fields.hpp"

namespace lhdef {

/// Area form w(x, y) dx^dy. The weight must not vanish on the domain.
struct SymplecticForm2D {
  ScalarField2D weight;
  Domain<2> domain;
};

/// The canonical form dx^dy on the whole plane.
SymplecticForm2D canonical_form();

/// X_h with i_{X_h} w = dh, i.e. X_h = (h_y / w, -h_x / w).
VectorField2D hamiltonian_vector_field(const ScalarField2D& h, const SymplecticForm2D& omega);

/// {f, g}_w = X_g f = (f_x g_y - f_y g_x) / w.
/// The result carries an exact gradient; its second derivatives are NaN.
ScalarField2D poisson_bracket(const ScalarField2D& f, const ScalarField2D& g,
                              const SymplecticForm2D& omega);

/// [X, Y] = J_Y X - J_X Y.
VectorField2D lie_bracket(const VectorField2D& X, const VectorField2D& Y);

/// Pointwise combination sum_k coeff_k(p) * fields_k(p).
VectorField2D combine(const std::array<ScalarField2D, 3>& coefficients,
                      const std::array<VectorField2D, 3>& fields, std::string name = {});

/// Central finite-difference gradient of f.eval (ignores the analytic gradient).
template <std::size_t N>
std::array<double, N> fd_gradient(const ScalarField<N>& f, const Point<N>& p, double step) {
  std::array<double, N> g{};
  for (std::size_t i = 0; i < N; ++i) {
    Point<N> plus = p, minus = p;
    plus[i] += step;
    minus[i] -= step;
    g[i] = (f.eval(plus) - f.eval(minus)) / (2.0 * step);
  }
  return g;
}

/// Central finite-difference Jacobian of X.eval; row k is the gradient of component k.
Mat2 fd_jacobian(const VectorField2D& X, const Point2& p, double step);

/// Poisson bracket value at p computed only from finite-difference gradients
/// of f.eval and g.eval.
double fd_bracket_oracle(const ScalarField2D& f, const ScalarField2D& g,
                         const SymplecticForm2D& omega, const Point2& p, double step);

}  // namespace lhdef

#endif  // LHDEF_GEOMETRY_HPP
