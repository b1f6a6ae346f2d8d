#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nabc {

using Integer = mpz_class;
using Rational = mpq_class;

/// "n" for integers, "n/d" otherwise; never a float.
std::string to_string(const Rational& q);

/// Accepts "n" or "n/d" with an optional sign; throws PARSE_ERROR.
Rational parse_rational(std::string_view text);

bool is_prime(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

}  // namespace nabc
