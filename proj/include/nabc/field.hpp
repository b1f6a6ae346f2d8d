#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "nabc/fp_poly.hpp"
#include "nabc/rational.hpp"

namespace nabc {

enum class FieldKind { rational_padic, prime_field, ratfunc_tadic };

/// log_p|a| on an exact scale: a rational, or -infinity for a = 0.
class LogValue {
 public:
  LogValue() : neg_inf_(true) {}
  LogValue(Rational q) : neg_inf_(false), q_(std::move(q)) {}
  static LogValue neg_infinity() { return LogValue(); }

  bool is_neg_infinity() const { return neg_inf_; }
  /// Finite value; requires !is_neg_infinity().
  const Rational& value() const;

  friend bool operator==(const LogValue& a, const LogValue& b);
  friend std::strong_ordering operator<=>(const LogValue& a, const LogValue& b);
  friend LogValue operator+(const LogValue& a, const LogValue& b);

  std::string to_string() const;

 private:
  bool neg_inf_;
  Rational q_;
};

/// Element of F_p(t) in lowest terms with monic denominator; zero is 0/1.
struct RatFunc {
  FpPoly num;
  FpPoly den;
  friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

/// A field element. Which alternative is live is fixed by the owning FieldSpec.
class Coeff {
 public:
  using Storage = std::variant<Rational, std::uint32_t, RatFunc>;

  Coeff() = default;
  explicit Coeff(Rational q) : v_(std::move(q)) {}
  explicit Coeff(std::uint32_t k) : v_(k) {}
  explicit Coeff(RatFunc r) : v_(std::move(r)) {}

  const Rational& rational() const { return std::get<Rational>(v_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }

  friend bool operator==(const Coeff&, const Coeff&) = default;

 private:
  Storage v_;
};

/// Coefficient field descriptor and the arithmetic that goes with it.
///
/// RATIONAL_P_ADIC is Q with |a| = p^{-v_p(a)}; PRIME_FIELD is F_p with the
/// trivial absolute value; RATFUNC_T_ADIC is F_p(t) with |a| = p^{-ord_t(a)}.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rational_padic(std::uint32_t p);
  static FieldSpec prime_field(std::uint32_t p);
  static FieldSpec ratfunc_tadic(std::uint32_t p);
  /// Throws VALIDATION_ERROR when p is not prime.
  static FieldSpec make(FieldKind kind, std::uint32_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  /// 0 for RATIONAL_P_ADIC, p otherwise.
  std::uint32_t characteristic() const { return kind_ == FieldKind::rational_padic ? 0 : p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long k) const;
  Coeff from_integer(const Integer& k) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  /// Throws DIVISION_BY_ZERO.
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff inv(const Coeff& a) const;
  Coeff pow(const Coeff& a, unsigned e) const;

  /// log_p|a| exactly; -infinity iff a = 0.
  LogValue log_abs(const Coeff& a) const;

  /// b with b^(p^s) = a. Throws WRONG_CHARACTERISTIC in characteristic 0 and
  /// NOT_A_PTH_POWER when no root exists in the represented field.
  Coeff pth_root(const Coeff& a, unsigned s) const;
  bool has_pth_root(const Coeff& a, unsigned s) const;

  /// Parses the coefficient grammar of this field; throws PARSE_ERROR.
  Coeff parse(std::string_view text) const;
  std::string format(const Coeff& a) const;

 private:
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  RatFunc make_ratfunc(FpPoly num, FpPoly den) const;

  FieldKind kind_ = FieldKind::rational_padic;
  std::uint32_t p_ = 2;
};

std::string_view field_kind_name(FieldKind kind);
/// Inverse of field_kind_name; throws VALIDATION_ERROR.
FieldKind parse_field_kind(std::string_view name);

/// v_p of a nonzero integer.
unsigned padic_valuation(const Integer& n, std::uint32_t p);

}  // namespace nabc
