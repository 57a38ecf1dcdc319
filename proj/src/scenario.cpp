#include "lhdef/scenario.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lhdef/deformation.hpp"
#include "lhdef/invariants.hpp"
#include "lhdef/numfmt.hpp"

namespace lhdef {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>> kAllowedKeys = {
    {"system", {"class", "z", "casimir", "guard"}},
    {"drive", {"b1", "b2", "b3"}},
    {"integration", {"mode", "initial", "t0", "t1", "dt"}},
    {"output", {"csv", "seed"}},
};

double parse_real(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double v;
  std::string rest;
  if (!(in >> v) || (in >> rest) || !std::isfinite(v))
    throw ConfigError("key '" + key + "': expected a finite number, got '" + text + "'");
  return v;
}

std::vector<double> parse_reals(const std::string& key, std::string text) {
  for (char& ch : text)
    if (ch == ',') ch = ' ';
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::vector<double> out;
  std::string token;
  while (in >> token) out.push_back(parse_real(key, token));
  return out;
}

std::string require(const pt::ptree& tree, const std::string& path) {
  const auto v = tree.get_optional<std::string>(path);
  if (!v) throw ConfigError("missing required key '" + path + "'");
  return *v;
}

}  // namespace

ScenarioConfig parse_scenario(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed scenario file: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    const auto allowed = kAllowedKeys.find(section);
    if (allowed == kAllowedKeys.end())
      throw ConfigError("unknown section '" + section + "'");
    for (const auto& [key, value] : body)
      if (!allowed->second.count(key))
        throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
  }

  ScenarioConfig cfg;
  cfg.tag = parse_class_tag(require(tree, "system.class"));
  cfg.z = parse_real("system.z", require(tree, "system.z"));
  if (auto c = tree.get_optional<std::string>("system.casimir"))
    cfg.c_override = parse_real("system.casimir", *c);
  if (auto g = tree.get_optional<std::string>("system.guard"))
    cfg.guard = parse_real("system.guard", *g);
  for (int i = 0; i < 3; ++i) {
    const std::string key = "drive.b" + std::to_string(i + 1);
    if (auto spec = tree.get_optional<std::string>(key)) cfg.b[i] = CoefficientCurve::parse(*spec);
  }
  const std::string mode = tree.get<std::string>("integration.mode", "single");
  if (mode == "single") cfg.mode = Mode::single;
  else if (mode == "two_copy") cfg.mode = Mode::two_copy;
  else throw ConfigError("integration.mode must be 'single' or 'two_copy', got '" + mode + "'");
  cfg.initial = parse_reals("integration.initial", require(tree, "integration.initial"));
  if (auto v = tree.get_optional<std::string>("integration.t0"))
    cfg.t0 = parse_real("integration.t0", *v);
  cfg.t1 = parse_real("integration.t1", require(tree, "integration.t1"));
  cfg.dt = parse_real("integration.dt", require(tree, "integration.dt"));
  cfg.csv_path = tree.get<std::string>("output.csv", "");
  if (auto s = tree.get_optional<std::string>("output.seed")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(*s, &used);
      if (used != s->size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError("output.seed must be a non-negative integer, got '" + *s + "'");
    }
  }
  validate(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read scenario file '" + path + "'");
  return parse_scenario(in);
}

void validate(const ScenarioConfig& cfg) {
  if (!std::isfinite(cfg.z)) throw ConfigError("z must be finite");
  if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(cfg.t1 > cfg.t0)) throw ConfigError("t1 must exceed t0");
  if (cfg.dt > cfg.t1 - cfg.t0) throw ConfigError("dt must not exceed t1 - t0");
  const std::size_t dim = cfg.mode == Mode::single ? 2 : 4;
  if (cfg.initial.size() != dim)
    throw ConfigError("initial point must have " + std::to_string(dim) + " coordinates in " +
                      (cfg.mode == Mode::single ? "single" : "two_copy") + " mode");
  const Sl2ClassSystem sys = make_class(cfg.tag, cfg.c_override, cfg.guard);
  for (std::size_t k = 0; k < dim; k += 2)
    if (!sys.domain({cfg.initial[k], cfg.initial[k + 1]}))
      throw ConfigError("initial point lies outside the domain of class " + to_string(cfg.tag));
}

namespace {

template <std::size_t N>
void write_rows(std::ostream& csv, const Trajectory<N>& traj) {
  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    csv << format_number(traj.times[r]);
    for (double v : traj.states[r]) csv << ',' << format_number(v);
    for (const auto& series : traj.invariants) csv << ',' << format_number(series.values[r]);
    csv << '\n';
  }
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, std::ostream& csv) {
  validate(cfg);
  const Sl2ClassSystem sys = make_class(cfg.tag, cfg.c_override, cfg.guard);
  const DeformedSystem dsys = deform(sys, cfg.z);
  const ScalarField2D Fz = casimir_level(dsys);

  RunResult result;
  std::ostringstream summary;
  summary << "run: class " << to_string(cfg.tag) << ", c = " << format_number(sys.c)
          << ", z = " << format_number(cfg.z) << ", mode "
          << (cfg.mode == Mode::single ? "single" : "two_copy");

  if (cfg.mode == Mode::single) {
    auto traj = integrate_rk4(assemble(dsys, cfg.b), Point2{cfg.initial[0], cfg.initial[1]},
                              cfg.t0, cfg.t1, cfg.dt);
    track(traj, Fz, "F_z");
    csv << "t,x,y,F_z\n";
    write_rows(csv, traj);
    result.truncated = traj.truncated;
    result.rows = traj.times.size();
    result.drifts.push_back(drift_of("F_z", traj.times, traj.invariants[0].values));
  } else {
    const Point<4> p0{cfg.initial[0], cfg.initial[1], cfg.initial[2], cfg.initial[3]};
    auto traj = integrate_rk4(assemble_two_copy(dsys, cfg.b), p0, cfg.t0, cfg.t1, cfg.dt);
    const auto copy_field = [&Fz](std::size_t k) {
      return TwoCopyField(
          [Fz, k](const Point<4>& p) { return embed<4>(Fz.jet({p[2 * k], p[2 * k + 1]}), 2 * k); },
          [Fz, k](const Point<4>& p) { return Fz.contains({p[2 * k], p[2 * k + 1]}); });
    };
    track(traj, copy_field(0), "F_z_copy1");
    track(traj, copy_field(1), "F_z_copy2");
    track(traj, coupled_invariant(dsys), "F2_z");
    csv << "t,x1,y1,x2,y2,F_z_copy1,F_z_copy2,F2_z\n";
    write_rows(csv, traj);
    result.truncated = traj.truncated;
    result.rows = traj.times.size();
    for (const auto& series : traj.invariants)
      result.drifts.push_back(drift_of(series.name, traj.times, series.values));
  }

  summary << ", " << result.rows << " samples" << (result.truncated ? " (TRUNCATED)" : "");
  for (const auto& d : result.drifts)
    summary << ", drift(" << d.name << ") abs " << format_sci(d.max_abs_deviation) << " rel "
            << format_sci(d.max_rel_deviation);
  result.summary = summary.str();
  return result;
}

}  // namespace lhdef
