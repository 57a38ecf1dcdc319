#ifndef LHDEF_LIMIT_SCAN_HPP
#define LHDEF_LIMIT_SCAN_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lhdef/sl2_catalog.hpp"

namespace lhdef {

/// Uniform n x n grid over [x0, x1] x [y0, y1]; points outside the class
/// domain are skipped.
struct GridSpec {
  double x0 = -1.0, x1 = 1.0, y0 = 0.5, y1 = 2.0;
  int n = 21;

  /// Parses "x0,x1,y0,y1,n". Throws ConfigError.
  static GridSpec parse(std::string_view text);
};

/// [-1,1]x[0.5,2] for P2 and I5, [1,2]x[-1,0] for I4.
GridSpec default_grid(ClassTag tag);

struct LimitScanRow {
  double z = 0.0;
  /// sup over the grid of |h_{z,i} - h_i| and of max-component |X_{z,i} - X_i|.
  std::array<double, 3> dev_h{};
  std::array<double, 3> dev_X{};
  /// Previous row's deviation over this row's; NaN on the first row or when
  /// either deviation is zero.
  std::array<double, 3> ratio_h{};
  std::array<double, 3> ratio_X{};
};

struct LimitScanTable {
  ClassTag tag = ClassTag::P2;
  std::size_t grid_points = 0;
  std::vector<LimitScanRow> rows;
};

/// z_sequence must be non-negative and strictly decreasing. Throws
/// std::invalid_argument for an empty sequence or a grid with no in-domain point.
LimitScanTable limit_scan(ClassTag tag, const std::vector<double>& z_sequence,
                          const GridSpec& grid);

void write_limit_scan_csv(std::ostream& out, const LimitScanTable& table);

}  // namespace lhdef

#endif  // LHDEF_LIMIT_SCAN_HPP
