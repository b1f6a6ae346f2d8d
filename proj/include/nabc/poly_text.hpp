#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nabc/mvpoly.hpp"

namespace nabc {

/// Parses "coeff * z1^e1 * z2^e2 + ..." over the given field and variable names.
/// Compound F_p(t) coefficients must be parenthesised, e.g. "(t+1)/(t) * x^2".
/// Throws PARSE_ERROR.
MvPoly parse_poly(std::string_view text, const FieldSpec& field, const std::vector<std::string>& vars);

/// Inverse of parse_poly; "0" for the zero polynomial.
std::string format_poly(const MvPoly& f, const std::vector<std::string>& vars = {});

}  // namespace nabc
