#ifndef LHDEF_NUMFMT_HPP
#define LHDEF_NUMFMT_HPP

#include <string>

namespace lhdef {

/// Shortest round-trip, locale-free decimal
/// ("nan"/"inf" for non-finite values).
std::string format_number(double value);

/// Fixed-width scientific notation with three decimals, e.g. "1.234e-10".
std::string format_sci(double value);

}  // namespace lhdef

#endif  // LHDEF_NUMFMT_HPP
