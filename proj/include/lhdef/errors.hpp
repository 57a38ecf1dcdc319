#ifndef LHDEF_ERRORS_HPP
#define LHDEF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lhdef {

/// Raised when a field is evaluated outside its (guarded) domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for inconsistent user configuration (class/Casimir sign mismatch,
/// malformed scenario files, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lhdef

#endif  // LHDEF_ERRORS_HPP
