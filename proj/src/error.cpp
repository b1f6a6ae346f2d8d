#include "nabc/error.hpp"

namespace nabc {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::division_by_zero: return "DIVISION_BY_ZERO";
    case Errc::not_a_pth_power: return "NOT_A_PTH_POWER";
    case Errc::wrong_characteristic: return "WRONG_CHARACTERISTIC";
    case Errc::spec_mismatch: return "SPEC_MISMATCH";
    case Errc::not_divisible: return "NOT_DIVISIBLE";
    case Errc::division_by_zero_poly: return "DIVISION_BY_ZERO_POLY";
    case Errc::both_zero: return "BOTH_ZERO";
    case Errc::zero_input: return "ZERO_INPUT";
    case Errc::zero_poly: return "ZERO_POLY";
    case Errc::constant_divisor: return "CONSTANT_DIVISOR";
    case Errc::degree_too_large: return "DEGREE_TOO_LARGE";
    case Errc::index_not_dominating: return "INDEX_NOT_DOMINATING";
    case Errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case Errc::not_a_power: return "NOT_A_POWER";
    case Errc::not_constant: return "NOT_CONSTANT";
    case Errc::not_f_independent: return "NOT_F_INDEPENDENT";
    case Errc::search_exhausted: return "SEARCH_EXHAUSTED";
    case Errc::vanishing_subsum: return "VANISHING_SUBSUM";
    case Errc::not_sum_zero: return "NOT_SUM_ZERO";
    case Errc::not_coprime: return "NOT_COPRIME";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::validation_error: return "VALIDATION_ERROR";
    case Errc::guard_exceeded: return "GUARD_EXCEEDED";
    case Errc::invariant_violated: return "INVARIANT_VIOLATED";
    case Errc::usage_error: return "USAGE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace nabc
