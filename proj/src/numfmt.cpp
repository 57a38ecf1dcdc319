#include "lhdef/numfmt.hpp"

#include <charconv>
#include <cmath>

namespace lhdef {

namespace {

std::string special(double value) {
  if (std::isnan(value)) return "nan";
  return value > 0 ? "inf" : "-inf";
}

std::string to_chars_string(double value, std::chars_format fmt, int precision) {
  if (!std::isfinite(value)) return special(value);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, fmt, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return special(value);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_sci(double value) {
  return to_chars_string(value, std::chars_format::scientific, 3);
}

}  // namespace lhdef
