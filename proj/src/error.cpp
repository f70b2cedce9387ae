#include "arrowhead/error.hpp"

namespace arrowhead {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument:
      return "invalid_argument";
    case ErrorCode::size_mismatch:
      return "size_mismatch";
    case ErrorCode::domain:
      return "domain";
    case ErrorCode::resource:
      return "resource";
    case ErrorCode::consistency:
      return "consistency";
    case ErrorCode::numeric:
      return "numeric";
    case ErrorCode::io:
      return "io";
    case ErrorCode::internal:
      return "internal";
  }
  return "unknown";
}

}  // namespace arrowhead
