#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nabc {

enum class Errc {
  division_by_zero,
  not_a_pth_power,
  wrong_characteristic,
  spec_mismatch,
  not_divisible,
  division_by_zero_poly,
  both_zero,
  zero_input,
  zero_poly,
  constant_divisor,
  degree_too_large,
  index_not_dominating,
  dimension_mismatch,
  not_a_power,
  not_constant,
  not_f_independent,
  search_exhausted,
  vanishing_subsum,
  not_sum_zero,
  not_coprime,
  parse_error,
  validation_error,
  guard_exceeded,
  invariant_violated,
  usage_error,
};

/// Upper-case wire name of an error code, e.g. "NOT_DIVISIBLE".
std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nabc
