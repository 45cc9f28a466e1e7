#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

enum class ErrorCode {
  constraint_violation,
  not_a_delta_operator,
  index_out_of_range,
  not_invertible,
  length_mismatch,
  arity_zero,
  order_too_large,
  not_forward_solvable,
  singular_system,
  pochhammer_pole,
  singular_at_origin,
  gamma_pole,
  schema_error,
  rational_parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace umbral
