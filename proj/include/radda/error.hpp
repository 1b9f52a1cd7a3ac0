#pragma once

#include <stdexcept>
#include <string>

namespace radda {

enum class ErrorCode {
  invalid_dimension,
  numeric,
  no_stabilizing_solution,
  conditioning,
  size_cap,
  shift_singular,
  singular_update,
  breakdown,
  cayley_singular,
  parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type for every failure raised by the library. The code tells
/// callers which recovery applies (e.g. retry with another shift on
/// ErrorCode::shift_singular).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radda
