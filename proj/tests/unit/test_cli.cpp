#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "lhdef/errors.hpp"
#include "lhdef/limit_scan.hpp"
#include "lhdef/numfmt.hpp"
#include "lhdef/scenario.hpp"
#include "lhdef/verification.hpp"

using namespace lhdef;

namespace {

ScenarioConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

const char* kTwoCopy = R"(
[system]
class = P2
z = 0.1
[drive]
b1 = constant 1
b2 = constant 0
b3 = constant 1
[integration]
mode = two_copy
initial = 0.3 1.2 -0.4 0.9
t1 = 1
dt = 1e-3
)";

std::vector<std::vector<double>> read_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_number(-2.5e-17) == "-2.5e-17");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_sci(1.23456e-10) == "1.235e-10");
}

TEST_CASE("scenario parsing") {
  const auto cfg = parse(kTwoCopy);
  CHECK(cfg.tag == ClassTag::P2);
  CHECK(cfg.mode == Mode::two_copy);
  CHECK(cfg.initial.size() == 4);
  CHECK(cfg.t0 == 0.0);
  CHECK(cfg.dt == 1e-3);
  CHECK(cfg.b[2](0.4) == 1.0);

  const std::string base = "[system]\nclass = I5\nz = 0.2\n[integration]\ninitial = 0.1 1\nt1 = 1\ndt = 0.1\n";
  CHECK_NOTHROW(parse(base));
  CHECK_THROWS_AS(parse(base + "[extra]\nkey = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse(base + "[output]\nformat = csv\n"), ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = I5\n[integration]\ninitial = 0.1 1\nt1 = 1\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse(base + "[drive]\nb1 = wobble 2\n"), ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = Q7\nz = 0\n[integration]\ninitial = 0 1\nt1 = 1\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = I5\nz = 0\n[integration]\ninitial = 0 -1\nt1 = 1\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = I5\nz = 0\n[integration]\ninitial = 0 1 2 3\nt1 = 1\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = I5\nz = 0\n[integration]\ninitial = 0 1\nt1 = 1\ndt = 0\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = I5\nz = 0\n[integration]\ninitial = 0 1\nt1 = 0\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = I5\nz = abc\n[integration]\ninitial = 0 1\nt1 = 1\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = P2\ncasimir = -2\nz = 0\n[integration]\ninitial = 0 1\nt1 = 1\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("[system]\nclass = I5\nz = 0\n[integration]\nmode = triple\ninitial = 0 1\nt1 = 1\ndt = 0.1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("not an ini [file"), ConfigError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.ini"), ConfigError);
}

TEST_CASE("run: zero drive gives constant rows") {
  const auto cfg = parse("[system]\nclass = I4\nz = 0.3\n[integration]\ninitial = 1.5 0.5\nt1 = 0.5\ndt = 0.1\n");
  std::ostringstream csv;
  const RunResult r = run_scenario(cfg, csv);
  std::string header;
  const auto rows = read_csv(csv.str(), &header);
  CHECK(header == "t,x,y,F_z");
  CHECK_FALSE(r.truncated);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row[1] == 1.5);
    CHECK(row[2] == 0.5);
    CHECK(row[3] == rows[0][3]);
    CHECK(std::abs(row[3] + 0.25) <= 1e-10);
  }
}

TEST_CASE("run: two-copy preset conserves the coupled invariant") {
  std::ostringstream a, b;
  const RunResult r = run_scenario(parse(kTwoCopy), a);
  run_scenario(parse(kTwoCopy), b);
  CHECK(a.str() == b.str());
  std::string header;
  const auto rows = read_csv(a.str(), &header);
  CHECK(header == "t,x1,y1,x2,y2,F_z_copy1,F_z_copy2,F2_z");
  REQUIRE(rows.size() == 1001);
  const double first = rows.front()[7], last = rows.back()[7];
  CHECK(std::abs(last - first) <= 1e-8 * std::abs(first));
  for (const auto& row : rows) {
    CHECK(std::abs(row[5] - 1.0) <= 1e-10);
    CHECK(std::abs(row[6] - 1.0) <= 1e-10);
  }
  REQUIRE(r.drifts.size() == 3);
  CHECK(r.drifts[2].name == "F2_z");
  CHECK(r.drifts[2].max_rel_deviation < 1e-8);
}

TEST_CASE("run: leaving the domain marks the run truncated") {
  // I5 with b = (0, -3, 0): y decays like exp(-1.5 t) and crosses the 0.5 guard near t = 0.46.
  const auto cfg = parse(
      "[system]\nclass = I5\nz = 0\nguard = 0.5\n[drive]\nb2 = constant -3\n"
      "[integration]\ninitial = 0.2 1\nt1 = 2\ndt = 0.01\n");
  std::ostringstream csv;
  const RunResult r = run_scenario(cfg, csv);
  CHECK(r.truncated);
  CHECK(r.rows < 201);
  CHECK(r.summary.find("TRUNCATED") != std::string::npos);
}

TEST_CASE("verification report mechanics") {
  const VerificationReport rep = verify(ClassTag::I4, {0.0, 0.1}, 42);
  CHECK(rep.passed());
  const CheckRow* row = rep.find("Table2 F_z^(2) conformance", 0.1);
  REQUIRE(row != nullptr);
  CHECK(row->status == CheckStatus::pass);
  CHECK(row->samples == 100);
  const CheckRow* flag = rep.find("Table2 X_z3 conformance", 0.1);
  REQUIRE(flag != nullptr);
  CHECK(flag->status == CheckStatus::flagged);

  VerificationReport broken = rep;
  broken.add("deliberately corrupted tolerance", std::nullopt, 1e-3, 1e-12, 1);
  CHECK_FALSE(broken.passed());
  CHECK(broken.rows.back().status == CheckStatus::fail);
  VerificationReport conf = rep;
  conf.add("conformance row", 0.1, 1.0, 1e-9, 1, true);
  CHECK(conf.passed());

  VerifyOptions tight;
  tight.tolerance_scale = 1e-30;
  CHECK_FALSE(verify(ClassTag::P2, {0.1}, 42, tight).passed());

  std::ostringstream a, b;
  write_report(a, verify(ClassTag::P2, {0.0, 0.1, 0.5}, 42));
  write_report(b, verify(ClassTag::P2, {0.0, 0.1, 0.5}, 42));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("overall: PASS") != std::string::npos);
  std::ostringstream c;
  write_report(c, verify(ClassTag::P2, {0.0, 0.1, 0.5}, 43));
  CHECK(c.str() != a.str());
}

TEST_CASE("tolerance scale from the environment") {
  ::setenv("LHDEF_TOL_SCALE", "10", 1);
  CHECK(tolerance_scale_from_env() == 10.0);
  ::setenv("LHDEF_TOL_SCALE", "-1", 1);
  CHECK_THROWS_AS(tolerance_scale_from_env(), ConfigError);
  ::setenv("LHDEF_TOL_SCALE", "x", 1);
  CHECK_THROWS_AS(tolerance_scale_from_env(), ConfigError);
  ::unsetenv("LHDEF_TOL_SCALE");
  CHECK(tolerance_scale_from_env() == 1.0);
}

TEST_CASE("limit scan grid and CSV") {
  const GridSpec g = GridSpec::parse("-1,1,0.5,2,5");
  CHECK(g.n == 5);
  CHECK(g.y1 == 2.0);
  CHECK_THROWS_AS(GridSpec::parse("1,2,3"), ConfigError);
  CHECK_THROWS_AS(GridSpec::parse("0,1,0,1,0"), ConfigError);
  CHECK_THROWS_AS(GridSpec::parse("1,0,0,1,3"), ConfigError);
  CHECK_THROWS_AS(GridSpec::parse("0,1,0,1,3,9"), ConfigError);
  std::ostringstream out;
  write_limit_scan_csv(out, limit_scan(ClassTag::P2, {0.2, 0.1, 0.05}, default_grid(ClassTag::P2)));
  std::string header;
  const auto rows = read_csv(out.str(), &header);
  CHECK(header.rfind("z,dev_h1,", 0) == 0);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2][0] == 0.05);
  for (std::size_t k = 8; k <= 9; ++k) {
    CHECK(rows[2][k] >= 3.4);
    CHECK(rows[2][k] <= 4.6);
  }
}
