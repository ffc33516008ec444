#include "core/errors.hpp"

namespace definetti {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_argument:
      return "bad_argument";
    case ErrorCode::parse_error:
      return "parse_error";
    case ErrorCode::divide_by_zero:
      return "divide_by_zero";
    case ErrorCode::empty_urn:
      return "empty_urn";
    case ErrorCode::bad_probability:
      return "bad_probability";
    case ErrorCode::out_of_range:
      return "out_of_range";
    case ErrorCode::bad_params:
      return "bad_params";
    case ErrorCode::horizon_exceeded:
      return "horizon_exceeded";
    case ErrorCode::not_a_cone:
      return "not_a_cone";
    case ErrorCode::not_completely_monotone:
      return "not_completely_monotone";
    case ErrorCode::not_exchangeable:
      return "not_exchangeable";
    case ErrorCode::inexact_candidate:
      return "inexact_candidate";
    case ErrorCode::internal_error:
      return "internal_error";
  }
  return "unknown";
}

}  // namespace definetti
