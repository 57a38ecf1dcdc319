// lhdef: deformed sl(2) Lie-Hamilton systems on the plane.
//
//   lhdef run <config> [--out PATH]
//   lhdef verify <class> [--z 0,0.1,0.5] [--seed 42] [--out PATH]
//   lhdef limit-scan <class> [--z 0.2,0.1,0.05] [--grid x0,x1,y0,y1,n] [--out PATH]
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 truncated trajectory.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lhdef/errors.hpp"
#include "lhdef/limit_scan.hpp"
#include "lhdef/scenario.hpp"
#include "lhdef/verification.hpp"

namespace {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kConfigError = 2, kTruncated = 3 };

std::vector<double> parse_z_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::istringstream num(item);
    num.imbue(std::locale::classic());
    double v;
    std::string rest;
    if (!(num >> v) || (num >> rest)) throw lhdef::ConfigError("bad z value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw lhdef::ConfigError("empty --z list");
  return out;
}

// Writes to `path` or to stdout when empty.
template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lhdef::ConfigError("cannot write '" + path + "'");
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson-Hopf deformations of sl(2) Lie-Hamilton systems on the plane"};
  app.require_subcommand(1);

  std::string config_path, out_path, class_name, z_text, grid_text;
  std::uint64_t seed = 42;

  auto* run = app.add_subcommand("run", "integrate a scenario and write a CSV trajectory");
  run->add_option("config,--config", config_path, "scenario file");
  run->add_option("--out", out_path, "CSV output path (overrides [output] csv)");

  auto* verify = app.add_subcommand("verify", "check every identity at seeded random points");
  verify->add_option("class,--class", class_name, "P2, I4 or I5");
  verify->add_option("--z", z_text, "comma-separated deformation parameters")
      ->default_val("0,0.1,0.5");
  verify->add_option("--seed", seed, "random seed")->default_val(42);
  verify->add_option("--out", out_path, "also write the report to this path");

  auto* scan = app.add_subcommand("limit-scan", "classical-limit convergence table");
  scan->add_option("class,--class", class_name, "P2, I4 or I5");
  scan->add_option("--z", z_text, "positive decreasing z sequence")
      ->default_val("0.2,0.1,0.05,0.025,0.0125");
  scan->add_option("--grid", grid_text, "x0,x1,y0,y1,n (default depends on class)");
  scan->add_option("--out", out_path, "CSV output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) {
      if (config_path.empty()) throw lhdef::ConfigError("run: missing scenario file");
      lhdef::ScenarioConfig cfg = lhdef::load_scenario(config_path);
      if (!out_path.empty()) cfg.csv_path = out_path;
      lhdef::RunResult result;
      if (cfg.csv_path.empty()) {
        result = lhdef::run_scenario(cfg, std::cout);
        std::cerr << result.summary << '\n';
      } else {
        emit(cfg.csv_path, [&](std::ostream& os) { result = lhdef::run_scenario(cfg, os); });
        std::cout << result.summary << '\n';
      }
      return result.truncated ? kTruncated : kOk;
    }

    if (class_name.empty()) throw lhdef::ConfigError("missing class (P2, I4 or I5)");
    const lhdef::ClassTag tag = lhdef::parse_class_tag(class_name);
    const std::vector<double> zs = parse_z_list(z_text);

    if (*verify) {
      lhdef::VerifyOptions options;
      options.tolerance_scale = lhdef::tolerance_scale_from_env();
      const auto report = lhdef::verify(tag, zs, seed, options);
      lhdef::write_report(std::cout, report);
      if (!out_path.empty()) emit(out_path, [&](std::ostream& os) { lhdef::write_report(os, report); });
      return report.passed() ? kOk : kVerificationFailed;
    }

    const lhdef::GridSpec grid =
        grid_text.empty() ? lhdef::default_grid(tag) : lhdef::GridSpec::parse(grid_text);
    const auto table = lhdef::limit_scan(tag, zs, grid);
    emit(out_path, [&](std::ostream& os) { lhdef::write_limit_scan_csv(os, table); });
    return kOk;
  } catch (const lhdef::ConfigError& e) {
    std::cerr << "lhdef: configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lhdef: invalid argument: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "lhdef: error: " << e.what() << '\n';
    return kConfigError;
  }
}
