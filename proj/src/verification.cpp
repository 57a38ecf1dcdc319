#include "lhdef/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>

#include "lhdef/deformation.hpp"
#include "lhdef/geometry.hpp"
#include "lhdef/invariants.hpp"
#include "lhdef/numfmt.hpp"
#include "lhdef/tables.hpp"

namespace lhdef {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::flagged: return "FLAG";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const CheckRow& r) { return r.status == CheckStatus::fail; });
}

CheckRow& VerificationReport::add(std::string name, std::optional<double> z, double max_error,
                                  double tolerance, std::size_t samples, bool conformance) {
  CheckRow row;
  row.name = std::move(name);
  row.z = z;
  row.max_error = max_error;
  row.tolerance = tolerance;
  row.samples = samples;
  row.conformance = conformance;
  const bool ok = max_error <= tolerance;  // NaN never passes
  row.status = ok ? CheckStatus::pass : (conformance ? CheckStatus::flagged : CheckStatus::fail);
  rows.push_back(std::move(row));
  return rows.back();
}

const CheckRow* VerificationReport::find(const std::string& name, std::optional<double> z) const {
  for (const auto& r : rows)
    if (r.name == name && r.z == z) return &r;
  return nullptr;
}

double scaled_error(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

Point2 sample_class_point(ClassTag tag, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> wide(-1.5, 1.5), band(0.5, 2.5);
  if (tag == ClassTag::I4) {
    const double y = wide(rng);
    const double d = band(rng);
    return {y + d, y};
  }
  const double x = wide(rng);
  return {x, band(rng)};
}

namespace {

template <typename P, typename F>
double max_over(const std::vector<P>& points, F&& error) {
  double worst = 0.0;
  for (const auto& p : points) {
    const double e = error(p);
    if (std::isnan(e)) return e;
    worst = std::max(worst, e);
  }
  return worst;
}

double vec_error(const Vec2& a, const Vec2& b) {
  return std::max(scaled_error(a[0], b[0]), scaled_error(a[1], b[1]));
}

const char* kPairNames[3] = {"12", "13", "23"};
constexpr std::size_t kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

}  // namespace

VerificationReport verify(ClassTag tag, const std::vector<double>& z_list, std::uint64_t seed,
                          const VerifyOptions& options) {
  VerificationReport report;
  report.tag = tag;
  report.seed = seed;
  report.tolerance_scale = options.tolerance_scale;
  const double s = options.tolerance_scale;
  const std::size_t n = options.samples;

  const Sl2ClassSystem sys = make_class(tag);
  report.c = sys.c;
  std::mt19937_64 rng(seed);

  std::vector<Point2> pts(n);
  for (auto& p : pts) p = sample_class_point(tag, rng);

  // Classical catalog.
  {
    const double classical_rhs[3][3] = {{-1, 0, 0}, {0, -2, 0}, {0, 0, -1}};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = kPairs[k];
      const ScalarField2D br = poisson_bracket(sys.h[i], sys.h[j], sys.omega);
      const double err = max_over(pts, [&](const Point2& p) {
        double rhs = 0.0;
        for (std::size_t m = 0; m < 3; ++m) rhs += classical_rhs[k][m] * sys.h[m](p);
        return scaled_error(br(p), rhs);
      });
      report.add(std::string("classical bracket {h") + kPairNames[k][0] + ",h" + kPairNames[k][1] +
                     "}",
                 std::nullopt, err, 1e-10 * s, n);
    }
    report.add("classical Casimir h1*h3-h2^2=c/4", std::nullopt,
               max_over(pts,
                        [&](const Point2& p) {
                          return scaled_error(sys.h[0](p) * sys.h[2](p) - sys.h[1](p) * sys.h[1](p),
                                              sys.c / 4.0);
                        }),
               1e-10 * s, n);
    report.add("tabulated F", std::nullopt, std::abs(sys.c / 4.0 - tabulated_casimir_level(tag)),
               1e-12 * s, 1, true);
    double hvf_err = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const VectorField2D Xh = hamiltonian_vector_field(sys.h[i], sys.omega);
      hvf_err = std::max(hvf_err, max_over(pts, [&](const Point2& p) {
                           return vec_error(Xh(p), sys.X[i](p));
                         }));
    }
    report.add("X_i = Hamiltonian field of h_i", std::nullopt, hvf_err, 1e-12 * s, n);
    const ScalarField2D j12 = poisson_bracket(poisson_bracket(sys.h[0], sys.h[1], sys.omega),
                                              sys.h[2], sys.omega);
    const ScalarField2D j23 = poisson_bracket(poisson_bracket(sys.h[1], sys.h[2], sys.omega),
                                              sys.h[0], sys.omega);
    const ScalarField2D j31 = poisson_bracket(poisson_bracket(sys.h[2], sys.h[0], sys.omega),
                                              sys.h[1], sys.omega);
    report.add("Jacobi identity", std::nullopt,
               max_over(pts, [&](const Point2& p) { return std::abs(j12(p) + j23(p) + j31(p)); }),
               1e-9 * s, n);
    const double classical_comm[3][3] = {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
    double comm_err = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = kPairs[k];
      const VectorField2D lb = lie_bracket(sys.X[i], sys.X[j]);
      comm_err = std::max(comm_err, max_over(pts, [&](const Point2& p) {
                            Vec2 rhs{0.0, 0.0};
                            for (std::size_t m = 0; m < 3; ++m) {
                              const Vec2 xm = sys.X[m](p);
                              rhs[0] += classical_comm[k][m] * xm[0];
                              rhs[1] += classical_comm[k][m] * xm[1];
                            }
                            return vec_error(lb(p), rhs);
                          }));
    }
    report.add("classical commutators", std::nullopt, comm_err, 1e-10 * s, n);
    double grad_err = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      grad_err = std::max(grad_err, max_over(pts, [&](const Point2& p) {
                            const auto g = sys.h[i].grad(p);
                            const auto fd = fd_gradient(sys.h[i], p, 1e-5);
                            return std::max(scaled_error(g[0], fd[0]), scaled_error(g[1], fd[1]));
                          }));
    report.add("gradients vs finite differences", std::nullopt, grad_err, 1e-6 * s, n);

    const auto phi = foliation_realization(sys.c);
    const SymplecticForm2D canon = canonical_form();
    std::uniform_real_distribution<double> coord(0.3, 2.0), sign(-1.0, 1.0);
    std::vector<Point2> fpts(n);
    for (auto& p : fpts) p = {coord(rng), sign(rng)};
    double fol_err = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = kPairs[k];
      const ScalarField2D br = poisson_bracket(phi[i], phi[j], canon);
      fol_err = std::max(fol_err, max_over(fpts, [&](const Point2& p) {
                           double rhs = 0.0;
                           for (std::size_t m = 0; m < 3; ++m) rhs += classical_rhs[k][m] * phi[m](p);
                           return scaled_error(br(p), rhs);
                         }));
    }
    report.add("foliation realization brackets", std::nullopt, fol_err, 1e-10 * s, n);
    report.add("foliation constraint = c/4", std::nullopt,
               max_over(fpts,
                        [&](const Point2& p) {
                          return std::abs(phi[0](p) * phi[2](p) - phi[1](p) * phi[1](p) -
                                          sys.c / 4.0);
                        }),
               1e-12 * s, n);
  }

  for (const double z : z_list) {
    std::vector<Point2> zp(n);
    for (auto& p : zp) p = sample_class_point(tag, rng);
    std::vector<Point<4>> pp(n);
    for (auto& p : pp) {
      const Point2 a = sample_class_point(tag, rng), b = sample_class_point(tag, rng);
      p = {a[0], a[1], b[0], b[1]};
    }

    const DeformedSystem dsys = deform(sys, z);
    const auto F = structure_functions(sys, z);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = kPairs[k];
      const ScalarField2D br = poisson_bracket(dsys.h[i], dsys.h[j], sys.omega);
      report.add(std::string("deformed bracket {h_z") + kPairNames[k][0] + ",h_z" +
                     kPairNames[k][1] + "} = F_z" + kPairNames[k],
                 z, max_over(zp, [&](const Point2& p) { return scaled_error(br(p), F[k](p)); }),
                 1e-9 * s, n);
    }

    const auto Xs = deformed_fields_from_symplectic(sys, z);
    double route_err = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      route_err = std::max(route_err, max_over(zp, [&](const Point2& p) {
                             return vec_error(dsys.X[i](p), Xs[i](p));
                           }));
    report.add("closed-form X_z vs symplectic route", z, route_err, 1e-9 * s, n);

    const auto P = predicted_commutators(sys, z);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = kPairs[k];
      const VectorField2D lb = lie_bracket(dsys.X[i], dsys.X[j]);
      report.add(std::string("commutator [X_z") + kPairNames[k][0] + ",X_z" + kPairNames[k][1] + "]",
                 z, max_over(zp, [&](const Point2& p) { return vec_error(lb(p), P[k](p)); }),
                 1e-8 * s, n);
    }
    {
      const VectorField2D lb = lie_bracket(dsys.X[1], dsys.X[2]);
      const VectorField2D printed = printed_x23_commutator(sys, z);
      report.add("printed [X_z2,X_z3] with shc^2 coefficient", z,
                 max_over(zp, [&](const Point2& p) { return vec_error(lb(p), printed(p)); }),
                 1e-8 * s, n, true);
    }

    const ScalarField2D Fz = casimir_level(dsys);
    double mean = 0.0;
    std::vector<double> vals;
    for (const auto& p : zp) vals.push_back(Fz(p));
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    const double stddev = vals.size() > 1 ? std::sqrt(var / static_cast<double>(vals.size() - 1)) : 0.0;
    report.add("Casimir level F_z = c/4", z,
               max_over(zp, [&](const Point2& p) { return scaled_error(Fz(p), sys.c / 4.0); }),
               1e-10 * s, n);
    report.add("Casimir level sample std dev", z, stddev, 1e-11 * s, n);

    const auto lift = two_copy_lift(dsys);
    const TwoCopyField F2 = coupled_invariant(dsys);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = kPairs[k];
      const TwoCopyField br = product_bracket(lift[i], lift[j], sys.omega);
      const double err = max_over(pp, [&](const Point<4>& p) {
        const Jet<4> l1 = lift[0].jet(p);
        double rhs;
        if (k == 0) rhs = -shc(2.0 * z * l1.v) * l1.v;
        else if (k == 1) rhs = -2.0 * lift[1](p);
        else rhs = -ch(2.0 * z * l1.v) * lift[2](p);
        return scaled_error(br(p), rhs);
      });
      report.add(std::string("lifted bracket {h") + kPairNames[k][0] + "^(2),h" +
                     kPairNames[k][1] + "^(2)}",
                 z, err, 1e-9 * s, n);
    }
    double comm = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const TwoCopyField br = product_bracket(F2, lift[i], sys.omega);
      comm = std::max(comm, max_over(pp, [&](const Point<4>& p) {
                        const Jet<4> f = F2.jet(p), h = lift[i].jet(p);
                        double scale = 1.0;
                        for (std::size_t c = 0; c < 2; ++c) {
                          const double w = sys.omega.weight({p[2 * c], p[2 * c + 1]});
                          scale += (std::abs(f.g[2 * c] * h.g[2 * c + 1]) +
                                    std::abs(f.g[2 * c + 1] * h.g[2 * c])) /
                                   std::abs(w);
                        }
                        return std::abs(br(p)) / scale;
                      }));
    }
    report.add("{F_z^(2), h_zi^(2)} = 0", z, comm, 1e-8 * s, n);

    {
      const auto vz = deformed_dual_functions(z, sys.c);
      std::uniform_real_distribution<double> v1d(0.2, 5.0), vd(-2.0, 2.0);
      std::vector<Point<3>> dp(n);
      for (auto& p : dp) p = {v1d(rng), vd(rng), vd(rng)};
      double kks_err = 0.0;
      for (std::size_t k = 0; k < 3; ++k) {
        const auto [i, j] = kPairs[k];
        const ScalarField3D br = kks_bracket(vz[i], vz[j]);
        kks_err = std::max(kks_err, max_over(dp, [&](const Point<3>& p) {
                             const double a = vz[0](p);
                             double rhs;
                             if (k == 0) rhs = -shc(2.0 * z * a) * a;
                             else if (k == 1) rhs = -2.0 * vz[1](p);
                             else rhs = -ch(2.0 * z * a) * vz[2](p);
                             return scaled_error(br(p), rhs);
                           }));
      }
      report.add("deformed dual functions under KKS bracket", z, kks_err, 1e-9 * s, n);
      report.add("deformed dual constraint = c/4", z,
                 max_over(dp,
                          [&](const Point<3>& p) {
                            const double a = vz[0](p), b = vz[1](p), c3 = vz[2](p);
                            const double t = shc(2.0 * z * a) * a * c3;
                            return std::abs(t - b * b - sys.c / 4.0) /
                                   std::max({1.0, std::abs(t), b * b});
                          }),
                 1e-10 * s, n);
    }

    // Conformance with the tabulated closed forms.
    const auto th = tabulated_deformed_hamiltonians(tag, z);
    const auto tX = tabulated_deformed_fields(tag, z);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string idx = std::to_string(i + 1);
      report.add("Table2 h_z" + idx + " conformance", z,
                 max_over(zp, [&](const Point2& p) { return scaled_error(th[i](p), dsys.h[i](p)); }),
                 1e-10 * s, n, true);
      report.add("Table2 X_z" + idx + " conformance", z,
                 max_over(zp, [&](const Point2& p) { return vec_error(tX[i](p), dsys.X[i](p)); }),
                 1e-10 * s, n, true);
    }
    const TwoCopyField tF2 = tabulated_deformed_coupled_invariant(tag, z);
    report.add("Table2 F_z^(2) conformance", z,
               max_over(pp, [&](const Point<4>& p) { return scaled_error(tF2(p), F2(p)); }),
               1e-9 * s, n, true);
    if (z == 0.0) {
      const TwoCopyField t1 = tabulated_coupled_invariant(tag);
      report.add("Table1 F^(2) conformance", z,
                 max_over(pp, [&](const Point<4>& p) { return scaled_error(t1(p), F2(p)); }),
                 1e-9 * s, n, true);
    }
  }
  return report;
}

void write_report(std::ostream& out, const VerificationReport& report) {
  char line[256];
  out << "verification report: class " << to_string(report.tag) << ", c = "
      << format_number(report.c) << ", seed " << report.seed
      << ", tolerance scale " << format_number(report.tolerance_scale) << '\n';
  std::snprintf(line, sizeof line, "%-48s %-8s %-10s %-10s %7s  %s\n", "check", "z", "max_error",
                "tolerance", "samples", "status");
  out << line;
  for (const auto& r : report.rows) {
    const std::string z = r.z ? format_number(*r.z) : "-";
    std::snprintf(line, sizeof line, "%-48s %-8s %-10s %-10s %7zu  %s\n", r.name.c_str(),
                  z.c_str(), format_sci(r.max_error).c_str(), format_sci(r.tolerance).c_str(),
                  r.samples, to_string(r.status).c_str());
    out << line;
  }
  std::size_t failed = 0, flagged = 0;
  for (const auto& r : report.rows) {
    failed += r.status == CheckStatus::fail;
    flagged += r.status == CheckStatus::flagged;
  }
  out << "overall: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.rows.size()
      << " checks, " << failed << " failed, " << flagged << " flagged)\n";
}

double tolerance_scale_from_env() {
  const char* raw = std::getenv("LHDEF_TOL_SCALE");
  if (raw == nullptr || *raw == '\0') return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw ConfigError(std::string("LHDEF_TOL_SCALE must be a positive number, got '") + raw + "'");
  return v;
}

}  // namespace lhdef
