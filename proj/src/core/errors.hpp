#pragma once

#include <stdexcept>
#include <string>

namespace definetti {

enum class ErrorCode {
  bad_argument,
  parse_error,
  divide_by_zero,
  empty_urn,
  bad_probability,
  out_of_range,
  bad_params,
  horizon_exceeded,
  not_a_cone,
  not_completely_monotone,
  not_exchangeable,
  inexact_candidate,
  internal_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace definetti
