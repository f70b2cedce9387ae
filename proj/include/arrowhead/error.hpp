#pragma once

#include <stdexcept>
#include <string>

namespace arrowhead {

enum class ErrorCode {
  invalid_argument = 1,
  size_mismatch,
  domain,
  resource,
  consistency,
  numeric,
  io,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// layer maps them one-to-one onto ah_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arrowhead
