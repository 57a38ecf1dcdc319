#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracles.hpp"
#include "lhdef/errors.hpp"
#include "lhdef/geometry.hpp"
#include "lhdef/sl2_catalog.hpp"
#include "lhdef/tables.hpp"
#include "lhdef/verification.hpp"

using namespace lhdef;

namespace {

const ClassTag kAll[] = {ClassTag::P2, ClassTag::I4, ClassTag::I5};

// Table 1 entries written out directly.
std::array<double, 3> table1_h(ClassTag tag, double x, double y) {
  switch (tag) {
    case ClassTag::P2: return {-1 / y, -x / y, -(x * x + y * y) / y};
    case ClassTag::I4: return {1 / (x - y), (x + y) / (2 * (x - y)), x * y / (x - y)};
    case ClassTag::I5: return {-1 / (2 * y * y), -x / (2 * y * y), -x * x / (2 * y * y)};
  }
  return {};
}

std::array<Vec2, 3> table1_X(ClassTag tag, double x, double y) {
  switch (tag) {
    case ClassTag::P2: return {Vec2{1, 0}, Vec2{x, y}, Vec2{x * x - y * y, 2 * x * y}};
    case ClassTag::I4: return {Vec2{1, 1}, Vec2{x, y}, Vec2{x * x, y * y}};
    case ClassTag::I5: return {Vec2{1, 0}, Vec2{x, y / 2}, Vec2{x * x, x * y}};
  }
  return {};
}

}  // namespace

TEST_CASE("class tags and defaults") {
  CHECK(parse_class_tag("p2") == ClassTag::P2);
  CHECK(parse_class_tag("I4") == ClassTag::I4);
  CHECK(to_string(ClassTag::I5) == "I5");
  CHECK_THROWS_AS(parse_class_tag("A1"), ConfigError);
  CHECK(default_casimir(ClassTag::P2) == 4.0);
  CHECK(default_casimir(ClassTag::I4) == -1.0);
  CHECK(default_casimir(ClassTag::I5) == 0.0);
}

TEST_CASE("make_class reproduces Table 1") {
  std::mt19937_64 rng(3);
  for (ClassTag tag : kAll) {
    const auto sys = make_class(tag);
    CHECK(sys.c == default_casimir(tag));
    for (int k = 0; k < 50; ++k) {
      const Point2 p = sample_class_point(tag, rng);
      const auto h = table1_h(tag, p[0], p[1]);
      const auto X = table1_X(tag, p[0], p[1]);
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(sys.h[i](p) == doctest::Approx(h[i]).epsilon(1e-13));
        CHECK(sys.X[i](p)[0] == doctest::Approx(X[i][0]).epsilon(1e-13));
        CHECK(sys.X[i](p)[1] == doctest::Approx(X[i][1]).epsilon(1e-13));
        const auto hv = hamiltonian_vector_field(sys.h[i], sys.omega)(p);
        CHECK(std::abs(hv[0] - X[i][0]) <= 1e-12 * std::max(1.0, std::abs(X[i][0])));
        CHECK(std::abs(hv[1] - X[i][1]) <= 1e-12 * std::max(1.0, std::abs(X[i][1])));
      }
      CHECK(std::abs(h[0] * h[2] - h[1] * h[1] - tabulated_casimir_level(tag)) < 1e-12);
    }
  }
}

TEST_CASE("make_class with a custom Casimir constant") {
  CHECK_THROWS_AS(make_class(ClassTag::P2, -1.0), ConfigError);
  CHECK_THROWS_AS(make_class(ClassTag::I4, 0.0), ConfigError);
  CHECK_THROWS_AS(make_class(ClassTag::I5, 2.0), ConfigError);
  std::mt19937_64 rng(8);
  for (auto [tag, c] : {std::pair{ClassTag::P2, 9.0}, std::pair{ClassTag::I4, -3.0}}) {
    const auto sys = make_class(tag, c);
    const auto& w = sys.omega;
    for (int k = 0; k < 100; ++k) {
      const Point2 p = sample_class_point(tag, rng);
      const double h1 = sys.h[0](p), h2 = sys.h[1](p), h3 = sys.h[2](p);
      CHECK(std::abs(h1 * h3 - h2 * h2 - c / 4) <= 1e-10 * std::max(1.0, std::abs(h1 * h3)));
      CHECK(std::abs(poisson_bracket(sys.h[0], sys.h[1], w)(p) + h1) <= 1e-10);
      CHECK(std::abs(poisson_bracket(sys.h[0], sys.h[2], w)(p) + 2 * h2) <= 1e-10);
      CHECK(std::abs(poisson_bracket(sys.h[1], sys.h[2], w)(p) + h3) <=
            1e-10 * std::max(1.0, std::abs(h3)));
      const auto X3 = hamiltonian_vector_field(sys.h[2], w)(p);
      CHECK(std::abs(X3[0] - sys.X[2](p)[0]) <= 1e-12 * std::max(1.0, std::abs(X3[0])));
      CHECK(std::abs(X3[1] - sys.X[2](p)[1]) <= 1e-12 * std::max(1.0, std::abs(X3[1])));
    }
  }
}

TEST_CASE("domain guards") {
  CHECK_FALSE(make_class(ClassTag::P2).domain({0.0, 0.0}));
  CHECK_FALSE(make_class(ClassTag::P2).domain({0.0, 1e-9}));
  CHECK(make_class(ClassTag::P2).domain({0.0, 1e-7}));
  CHECK_FALSE(make_class(ClassTag::I4).domain({1.0, 1.0}));
  CHECK_FALSE(make_class(ClassTag::I4).domain({0.0, 1.0}));
  CHECK_THROWS_AS(make_class(ClassTag::I5).h[0]({1.0, -1.0}), DomainError);
}

TEST_CASE("KKS bracket on sl(2)*") {
  const auto v = dual_coordinates();
  const auto C = dual_casimir();
  CHECK(kks_bracket(v[0], v[1])({1, 2, 3}) == doctest::Approx(-1.0));
  CHECK(kks_bracket(v[0], v[2])({1, 2, 3}) == doctest::Approx(-4.0));
  CHECK(kks_bracket(v[1], v[2])({1, 2, 3}) == doctest::Approx(-3.0));
  for (Point<3> p : {Point<3>{1, 2, 3}, Point<3>{-0.4, 0.8, 2.5}}) {
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(kks_bracket(C, v[i])(p)) < 1e-14);
    CHECK(kks_bracket(v[1], v[1])(p) == 0.0);
  }
}

TEST_CASE("Darboux chart round trip") {
  for (Sl2DualPoint v : {Sl2DualPoint{1, 2, 3}, Sl2DualPoint{-0.3, 0.7, -2}}) {
    const auto d = to_darboux(v);
    CHECK(d.x == v.v1);
    CHECK(d.y == doctest::Approx(-v.v2 / v.v1));
    CHECK(d.casimir == doctest::Approx(v.v1 * v.v3 - v.v2 * v.v2));
    const auto back = from_darboux(d);
    CHECK(std::abs(back.v1 - v.v1) < 1e-12);
    CHECK(std::abs(back.v2 - v.v2) < 1e-12);
    CHECK(std::abs(back.v3 - v.v3) < 1e-12);
  }
  CHECK_THROWS_AS(to_darboux({0, 1, 1}), DomainError);
}

TEST_CASE("foliation realization") {
  const auto phi4 = foliation_realization(4.0);
  CHECK(phi4[0]({1, 1}) == 1.0);
  CHECK(phi4[1]({1, 1}) == -1.0);
  CHECK(phi4[2]({1, 1}) == doctest::Approx(2.0));
  const auto phi0 = foliation_realization(0.0);
  CHECK(phi0[2]({2, 3}) == doctest::Approx(18.0));
  const auto phim = foliation_realization(-1.0);
  const auto canon = canonical_form();
  CHECK(poisson_bracket(phim[0], phim[1], canon)({2, 3}) == doctest::Approx(-2.0));
  CHECK(oracle::bracket<2>(phim[0], phim[1], {2, 3}, [](const Point2&) { return 1.0; }) ==
        doctest::Approx(-2.0));
  CHECK_THROWS_AS(phi4[0]({0.0, 1.0}), DomainError);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> xs(0.3, 3.0), ys(-2.0, 2.0);
  for (double c : {4.0, 0.0, -1.0}) {
    const auto phi = foliation_realization(c);
    for (int k = 0; k < 100; ++k) {
      const Point2 p{k % 2 ? xs(rng) : -xs(rng), ys(rng)};
      const double a = phi[0](p), b = phi[1](p), e = phi[2](p);
      CHECK(std::abs(a * e - b * b - c / 4) <= 1e-12);
      CHECK(std::abs(poisson_bracket(phi[0], phi[1], canon)(p) + a) <= 1e-10);
      CHECK(std::abs(poisson_bracket(phi[0], phi[2], canon)(p) + 2 * b) <= 1e-10);
      CHECK(std::abs(poisson_bracket(phi[1], phi[2], canon)(p) + e) <= 1e-10);
    }
  }
}

TEST_CASE("deformed dual functions") {
  const auto v0 = deformed_dual_functions(0.0, 4.0);
  CHECK(v0[2]({2, 3, 0}) == doctest::Approx(9.0 / 2 + 4.0 / 8));
  const auto v = deformed_dual_functions(0.1, 4.0);
  const Point<3> p{1, 1, 5};
  const double a = v[0](p);
  const double rhs = -std::cosh(0.2 * a) * v[2](p);
  CHECK(kks_bracket(v[1], v[2])(p) == doctest::Approx(rhs).epsilon(1e-12));
  CHECK(oracle::kks(v[1], v[2], p) == doctest::Approx(rhs).epsilon(1e-8));
  CHECK_THROWS_AS(v[1]({0, 1, 1}), DomainError);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> v1(0.2, 5.0), vo(-2, 2), zs(0, 1);
  for (double c : {4.0, 0.0, -1.0}) {
    for (int k = 0; k < 100; ++k) {
      const double z = zs(rng);
      const auto f = deformed_dual_functions(z, c);
      const Point<3> q{v1(rng), vo(rng), vo(rng)};
      const double s = oracle::sinhc(2 * z * f[0](q));
      const double lhs = s * f[0](q) * f[2](q) - f[1](q) * f[1](q);
      CHECK(std::abs(lhs - c / 4) <= 1e-10 * std::max(1.0, std::abs(s * f[0](q) * f[2](q))));
      const double a1 = f[0](q);
      CHECK(std::abs(kks_bracket(f[0], f[1])(q) + s * a1) <= 1e-9);
      CHECK(std::abs(kks_bracket(f[0], f[2])(q) + 2 * f[1](q)) <= 1e-9);
      CHECK(std::abs(kks_bracket(f[1], f[2])(q) + std::cosh(2 * z * a1) * f[2](q)) <=
            1e-9 * std::max(1.0, std::abs(f[2](q))));
    }
  }
}
