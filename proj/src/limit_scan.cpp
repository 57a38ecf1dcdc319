#include "lhdef/limit_scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lhdef/deformation.hpp"
#include "lhdef/numfmt.hpp"

namespace lhdef {

GridSpec GridSpec::parse(std::string_view text) {
  std::string s(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  GridSpec g;
  if (!(in >> g.x0 >> g.x1 >> g.y0 >> g.y1 >> g.n))
    throw ConfigError("grid must be \"x0,x1,y0,y1,n\", got '" + std::string(text) + "'");
  std::string rest;
  if (in >> rest) throw ConfigError("trailing characters in grid '" + std::string(text) + "'");
  if (g.n < 1 || !(g.x1 >= g.x0) || !(g.y1 >= g.y0))
    throw ConfigError("grid needs n >= 1, x0 <= x1 and y0 <= y1");
  return g;
}

GridSpec default_grid(ClassTag tag) {
  if (tag == ClassTag::I4) return {1.0, 2.0, -1.0, 0.0, 21};
  return {-1.0, 1.0, 0.5, 2.0, 21};
}

LimitScanTable limit_scan(ClassTag tag, const std::vector<double>& z_sequence,
                          const GridSpec& grid) {
  if (z_sequence.empty()) throw std::invalid_argument("limit_scan: empty z sequence");
  for (std::size_t k = 0; k < z_sequence.size(); ++k) {
    if (!(z_sequence[k] >= 0.0)) throw std::invalid_argument("limit_scan: z must be >= 0");
    if (k > 0 && !(z_sequence[k] < z_sequence[k - 1]))
      throw std::invalid_argument("limit_scan: z sequence must be strictly decreasing");
  }
  const Sl2ClassSystem sys = make_class(tag);

  std::vector<Point2> points;
  const auto coord = [n = grid.n](double a, double b, int i) {
    return n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j) {
      const Point2 p{coord(grid.x0, grid.x1, i), coord(grid.y0, grid.y1, j)};
      if (sys.domain(p)) points.push_back(p);
    }
  if (points.empty()) throw std::invalid_argument("limit_scan: grid has no point inside the domain");

  LimitScanTable table;
  table.tag = tag;
  table.grid_points = points.size();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const double z : z_sequence) {
    const DeformedSystem d = deform(sys, z);
    LimitScanRow row;
    row.z = z;
    for (const auto& p : points)
      for (std::size_t i = 0; i < 3; ++i) {
        row.dev_h[i] = std::max(row.dev_h[i], std::abs(d.h[i](p) - sys.h[i](p)));
        const Vec2 a = d.X[i](p), b = sys.X[i](p);
        row.dev_X[i] = std::max(row.dev_X[i], std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1])));
      }
    const auto ratio = [](double prev, double cur) { return prev > 0.0 && cur > 0.0 ? prev / cur : nan; };
    for (std::size_t i = 0; i < 3; ++i) {
      row.ratio_h[i] = table.rows.empty() ? nan : ratio(table.rows.back().dev_h[i], row.dev_h[i]);
      row.ratio_X[i] = table.rows.empty() ? nan : ratio(table.rows.back().dev_X[i], row.dev_X[i]);
    }
    table.rows.push_back(row);
  }
  return table;
}

void write_limit_scan_csv(std::ostream& out, const LimitScanTable& table) {
  out << "z";
  for (const char* kind : {"dev_h", "dev_X", "ratio_h", "ratio_X"})
    for (int i = 1; i <= 3; ++i) out << ',' << kind << i;
  out << '\n';
  for (const auto& r : table.rows) {
    out << format_number(r.z);
    for (const auto* arr : {&r.dev_h, &r.dev_X, &r.ratio_h, &r.ratio_X})
      for (double v : *arr) out << ',' << format_number(v);
    out << '\n';
  }
}

}  // namespace lhdef
