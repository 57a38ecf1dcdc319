#ifndef LHDEF_JET_HPP
#define LHDEF_JET_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "lhdef/special.hpp"

namespace lhdef {

/// Second-order truncated Taylor jet of a scalar function of N variables:
/// value, gradient and (row-major, symmetric) Hessian at one point.
///
/// Arithmetic on jets applies the product/quotient/chain rules exactly, so a
/// field written as an expression of coordinate jets carries its analytic
/// first and second derivatives. A jet whose Hessian is unknown (for instance
/// the derivative of another jet) stores NaN there; NaN then propagates only
/// into second-order data.
template <std::size_t N>
struct Jet {
  double v = 0.0;
  std::array<double, N> g{};
  std::array<double, N * N> h{};

  static Jet constant(double value) {
    Jet j;
    j.v = value;
    return j;
  }

  static Jet variable(double value, std::size_t index) {
    Jet j;
    j.v = value;
    j.g[index] = 1.0;
    return j;
  }

  double hess(std::size_t i, std::size_t k) const { return h[i * N + k]; }
  bool has_hessian() const {
    for (double e : h)
      if (std::isnan(e)) return false;
    return true;
  }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (std::size_t i = 0; i < N; ++i) g[i] += o.g[i];
    for (std::size_t i = 0; i < N * N; ++i) h[i] += o.h[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (std::size_t i = 0; i < N; ++i) g[i] -= o.g[i];
    for (std::size_t i = 0; i < N * N; ++i) h[i] -= o.h[i];
    return *this;
  }
  Jet& operator*=(double s) {
    v *= s;
    for (auto& e : g) e *= s;
    for (auto& e : h) e *= s;
    return *this;
  }
  Jet& operator+=(double s) {
    v += s;
    return *this;
  }
};

/// Partial derivative d/dx_k of a jet. The result has an exact value and
/// gradient; its Hessian would need third derivatives and is NaN.
template <std::size_t N>
Jet<N> partial(const Jet<N>& a, std::size_t k) {
  Jet<N> r;
  r.v = a.g[k];
  for (std::size_t i = 0; i < N; ++i) r.g[i] = a.h[k * N + i];
  r.h.fill(std::numeric_limits<double>::quiet_NaN());
  return r;
}

/// Embeds a jet in M >= N variables, placing its variables at [offset, offset+N).
template <std::size_t M, std::size_t N>
Jet<M> embed(const Jet<N>& a, std::size_t offset) {
  static_assert(M >= N);
  Jet<M> r;
  r.v = a.v;
  for (std::size_t i = 0; i < N; ++i) {
    r.g[offset + i] = a.g[i];
    for (std::size_t k = 0; k < N; ++k) r.h[(offset + i) * M + offset + k] = a.h[i * N + k];
  }
  return r;
}

/// Applies a scalar function given its value and first two derivatives at a.v.
template <std::size_t N>
Jet<N> chain(const Jet<N>& a, double f, double df, double d2f) {
  Jet<N> r;
  r.v = f;
  for (std::size_t i = 0; i < N; ++i) r.g[i] = df * a.g[i];
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      r.h[i * N + k] = df * a.h[i * N + k] + d2f * a.g[i] * a.g[k];
  return r;
}

template <std::size_t N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <std::size_t N>
Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <std::size_t N>
Jet<N> operator-(Jet<N> a) { return a *= -1.0; }
template <std::size_t N>
Jet<N> operator*(Jet<N> a, double s) { return a *= s; }
template <std::size_t N>
Jet<N> operator*(double s, Jet<N> a) { return a *= s; }
template <std::size_t N>
Jet<N> operator/(Jet<N> a, double s) { return a *= 1.0 / s; }
template <std::size_t N>
Jet<N> operator+(Jet<N> a, double s) { return a += s; }
template <std::size_t N>
Jet<N> operator+(double s, Jet<N> a) { return a += s; }
template <std::size_t N>
Jet<N> operator-(Jet<N> a, double s) { return a += -s; }
template <std::size_t N>
Jet<N> operator-(double s, const Jet<N>& a) { return -a + s; }

template <std::size_t N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v * b.v;
  for (std::size_t i = 0; i < N; ++i) r.g[i] = a.v * b.g[i] + b.v * a.g[i];
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      r.h[i * N + k] = a.v * b.h[i * N + k] + b.v * a.h[i * N + k] + a.g[i] * b.g[k] +
                       b.g[i] * a.g[k];
  return r;
}

template <std::size_t N>
Jet<N> reciprocal(const Jet<N>& a) {
  const double inv = 1.0 / a.v;
  return chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

template <std::size_t N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) { return a * reciprocal(b); }
template <std::size_t N>
Jet<N> operator/(double s, const Jet<N>& b) { return s * reciprocal(b); }

template <std::size_t N>
Jet<N> sqr(const Jet<N>& a) { return a * a; }

template <std::size_t N>
Jet<N> exp(const Jet<N>& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e, e);
}

template <std::size_t N>
Jet<N> cosh(const Jet<N>& a) {
  const double c = std::cosh(a.v), s = std::sinh(a.v);
  return chain(a, c, s, c);
}

template <std::size_t N>
Jet<N> shc(const Jet<N>& a) {
  const ShcDerivatives d = shc_derivatives(a.v);
  return chain(a, d.value, d.first, d.second);
}

}  // namespace lhdef

#endif  // LHDEF_JET_HPP
