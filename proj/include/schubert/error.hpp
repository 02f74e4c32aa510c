#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

enum class ErrorKind {
  invalid_period,
  invalid_window,
  period_mismatch,
  index_out_of_range,
  infinite_group,
  cap_exceeded,
  not_in_quotient,
  budget_exceeded,
  non_unit_divisor,
  invalid_argument,
  not_smooth,
  not_increasing,
  not_fully_supported,
  not_spherical,
  malformed_relation,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schubert
