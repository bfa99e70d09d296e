#include "trilights/error.hpp"

namespace trilights {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::size: return "size";
    case ErrorKind::coordinate: return "coordinate";
    case ErrorKind::shape: return "shape";
    case ErrorKind::range: return "range";
    case ErrorKind::oracle_range: return "oracle-range";
    case ErrorKind::parse: return "parse";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::construction_failure: return "construction-failure";
  }
  return "unknown";
}

}  // namespace trilights
