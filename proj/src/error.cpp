#include "radda/error.hpp"

namespace radda {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::numeric: return "numeric";
    case ErrorCode::no_stabilizing_solution: return "no-stabilizing-solution";
    case ErrorCode::conditioning: return "conditioning";
    case ErrorCode::size_cap: return "size-cap";
    case ErrorCode::shift_singular: return "shift-singular";
    case ErrorCode::singular_update: return "singular-update";
    case ErrorCode::breakdown: return "breakdown";
    case ErrorCode::cayley_singular: return "cayley-singular";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace radda
