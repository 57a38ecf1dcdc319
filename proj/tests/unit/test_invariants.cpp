#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracles.hpp"
#include "lhdef/deformation.hpp"
#include "lhdef/invariants.hpp"
#include "lhdef/tables.hpp"
#include "lhdef/verification.hpp"

using namespace lhdef;
using oracle::sinhc;

namespace {

const ClassTag kAll[] = {ClassTag::P2, ClassTag::I4, ClassTag::I5};

Point<4> sample_pair(ClassTag tag, std::mt19937_64& rng) {
  const Point2 a = sample_class_point(tag, rng), b = sample_class_point(tag, rng);
  return {a[0], a[1], b[0], b[1]};
}

}  // namespace

TEST_CASE("Casimir level of the deformed system") {
  std::mt19937_64 rng(17);
  for (ClassTag tag : kAll) {
    for (double z : {0.0, 0.1, 0.7}) {
      const auto F = casimir_level(deform(make_class(tag), z));
      double sum = 0, sum2 = 0;
      const int n = 1000;
      for (int k = 0; k < n; ++k) {
        const double v = F(sample_class_point(tag, rng));
        CHECK(std::abs(v - tabulated_casimir_level(tag)) <= 1e-10);
        sum += v;
        sum2 += v * v;
      }
      const double mean = sum / n;
      CHECK(std::sqrt(std::max(0.0, sum2 / n - mean * mean)) < 1e-11);
    }
  }
}

TEST_CASE("two-copy lift at z = 0 is the plain sum") {
  const auto sys = make_class(ClassTag::I4);
  const auto lift = two_copy_lift(deform(sys, 0.0));
  const Point<4> p{1.2, 0.1, 0.4, -1.0};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(lift[i](p) == doctest::Approx(sys.h[i]({1.2, 0.1}) + sys.h[i]({0.4, -1.0})));
    const Point<4> swapped{p[2], p[3], p[0], p[1]};
    CHECK(lift[i](swapped) == doctest::Approx(lift[i](p)));
  }
  CHECK_THROWS_AS(lift[0]({0.0, 1.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("two-copy lift mirror symmetry") {
  // Swapping the copies exchanges e^{2z h1(p2)} and e^{-2z h1(p1)}: flipping z too restores the value.
  const auto sys = make_class(ClassTag::P2);
  const auto a = two_copy_lift(deform(sys, 0.3));
  const auto b = two_copy_lift(deform(sys, -0.3));
  const Point<4> p{0.2, 1.4, -0.5, 0.8};
  const Point<4> q{p[2], p[3], p[0], p[1]};
  for (std::size_t i = 1; i < 3; ++i) CHECK(a[i](p) == doctest::Approx(b[i](q)).epsilon(1e-13));
}

TEST_CASE("lifted brackets and the coupled invariant") {
  std::mt19937_64 rng(23);
  for (ClassTag tag : kAll) {
    const auto sys = make_class(tag);
    const auto w = [&](const Point2& q) { return sys.omega.weight(q); };
    for (double z : {0.0, 0.1, 0.5}) {
      const auto d = deform(sys, z);
      const auto lift = two_copy_lift(d);
      const auto F2 = coupled_invariant(d);
      const auto b12 = product_bracket(lift[0], lift[1], sys.omega);
      const auto b13 = product_bracket(lift[0], lift[2], sys.omega);
      const auto b23 = product_bracket(lift[1], lift[2], sys.omega);
      for (int k = 0; k < 100; ++k) {
        const Point<4> p = sample_pair(tag, rng);
        const double l1 = lift[0](p);
        CHECK(scaled_error(b12(p), -sinhc(2 * z * l1) * l1) <= 1e-9);
        CHECK(scaled_error(b13(p), -2 * lift[1](p)) <= 1e-9);
        CHECK(scaled_error(b23(p), -std::cosh(2 * z * l1) * lift[2](p)) <= 1e-9);
        for (std::size_t i = 0; i < 3; ++i) {
          const double c = product_bracket(F2, lift[i], sys.omega)(p);
          CHECK(std::abs(c) <= 1e-8 * std::max(1.0, std::abs(F2(p) * lift[i](p))));
        }
      }
      const Point<4> p = sample_pair(tag, rng);
      CHECK(oracle::bracket<4>(lift[1], lift[2], p, w) ==
            doctest::Approx(b23(p)).epsilon(1e-7));
      CHECK(std::abs(oracle::bracket<4>(F2, lift[0], p, w)) <= 1e-6 * std::max(1.0, std::abs(F2(p))));
    }
  }
}

TEST_CASE("product Hamiltonian vector is the two copy-wise fields") {
  const auto sys = make_class(ClassTag::P2);
  const auto lift = two_copy_lift(deform(sys, 0.0));
  const Point<4> p{0.3, 1.1, -0.6, 0.7};
  const Point<4> v = product_hamiltonian_vector(lift[1].jet(p), sys.omega, p);
  CHECK(v[0] == doctest::Approx(0.3));
  CHECK(v[1] == doctest::Approx(1.1));
  CHECK(v[2] == doctest::Approx(-0.6));
  CHECK(v[3] == doctest::Approx(0.7));
}

TEST_CASE("Table 1 coupled invariants") {
  const auto p2 = tabulated_coupled_invariant(ClassTag::P2);
  CHECK(p2({1, 2, 3, 4}) == doctest::Approx(5.0));
  const auto i4 = tabulated_coupled_invariant(ClassTag::I4);
  CHECK(i4({1, 2, 0, 3}) == doctest::Approx(-4.0 / 3.0));
  // The coupled invariant at z = 0 matches Table 1 with no additive offset.
  std::mt19937_64 rng(31);
  for (ClassTag tag : kAll) {
    const auto F2 = coupled_invariant(deform(make_class(tag), 0.0));
    const auto T = tabulated_coupled_invariant(tag);
    for (int k = 0; k < 100; ++k) {
      const Point<4> p = sample_pair(tag, rng);
      CHECK(scaled_error(F2(p), T(p)) <= 1e-9);
    }
  }
}

TEST_CASE("Table 2 coupled invariants") {
  std::mt19937_64 rng(37);
  const auto i5 = coupled_invariant(deform(make_class(ClassTag::I5), 0.1));
  for (int k = 0; k < 100; ++k) {
    const Point<4> p = sample_pair(ClassTag::I5, rng);
    const double x1 = p[0], y1 = p[1], x2 = p[2], y2 = p[3];
    const double a = 0.1 / (y1 * y1), b = 0.1 / (y2 * y2);
    const double ref = (x1 - x2) * (x1 - x2) / (4 * y1 * y1 * y2 * y2) * sinhc(a) * sinhc(b) *
                       std::exp(a) * std::exp(-b);
    CHECK(std::abs(i5(p) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
  }
  for (ClassTag tag : kAll) {
    const auto F2 = coupled_invariant(deform(make_class(tag), 0.5));
    const auto T2 = tabulated_deformed_coupled_invariant(tag, 0.5);
    for (int k = 0; k < 100; ++k) {
      const Point<4> p = sample_pair(tag, rng);
      CHECK(scaled_error(T2(p), F2(p)) <= 1e-9);
    }
  }
}

TEST_CASE("Table 2 coupled invariants tend to Table 1 linearly in z") {
  // The factors e^{+-2z h1} make the approach first order, so the gap halves with z.
  std::mt19937_64 rng(41);
  for (ClassTag tag : kAll) {
    const auto T1 = tabulated_coupled_invariant(tag);
    const auto a = tabulated_deformed_coupled_invariant(tag, 1e-5);
    const auto b = tabulated_deformed_coupled_invariant(tag, 5e-6);
    for (int k = 0; k < 100; ++k) {
      const Point<4> p = sample_pair(tag, rng);
      const double ea = a(p) - T1(p), eb = b(p) - T1(p);
      const double scale = std::max(1.0, std::abs(T1(p)));
      CHECK(std::abs(ea) <= 1e-3 * scale);
      if (std::abs(ea) > 1e-7 * scale) CHECK(ea / eb == doctest::Approx(2.0).epsilon(0.05));
    }
  }
}
