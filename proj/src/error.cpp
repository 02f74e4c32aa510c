#include "schubert/error.hpp"

namespace schubert {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_period: return "invalid-period";
    case ErrorKind::invalid_window: return "invalid-window";
    case ErrorKind::period_mismatch: return "period-mismatch";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::infinite_group: return "infinite-group";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::not_in_quotient: return "not-in-quotient";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::non_unit_divisor: return "non-unit-divisor";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::not_smooth: return "not-smooth";
    case ErrorKind::not_increasing: return "not-increasing";
    case ErrorKind::not_fully_supported: return "not-fully-supported";
    case ErrorKind::not_spherical: return "not-spherical";
    case ErrorKind::malformed_relation: return "malformed-relation";
  }
  return "unknown";
}

}  // namespace schubert
