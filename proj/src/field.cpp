#include "nabc/field.hpp"

#include <cassert>
#include <cctype>
#include <optional>

#include "nabc/error.hpp"

namespace nabc {

// ---------------------------------------------------------------- LogValue

const Rational& LogValue::value() const {
  assert(!neg_inf_);
  return q_;
}

bool operator==(const LogValue& a, const LogValue& b) {
  if (a.neg_inf_ || b.neg_inf_) return a.neg_inf_ == b.neg_inf_;
  return a.q_ == b.q_;
}

std::strong_ordering operator<=>(const LogValue& a, const LogValue& b) {
  if (a.neg_inf_ && b.neg_inf_) return std::strong_ordering::equal;
  if (a.neg_inf_) return std::strong_ordering::less;
  if (b.neg_inf_) return std::strong_ordering::greater;
  int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

LogValue operator+(const LogValue& a, const LogValue& b) {
  if (a.neg_inf_ || b.neg_inf_) return LogValue::neg_infinity();
  return LogValue(Rational(a.q_ + b.q_));
}

std::string LogValue::to_string() const { return neg_inf_ ? "-inf" : nabc::to_string(q_); }

// ---------------------------------------------------------------- helpers

unsigned padic_valuation(const Integer& n, std::uint32_t p) {
  assert(n != 0);
  Integer m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::string_view field_kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::rational_padic: return "RATIONAL_P_ADIC";
    case FieldKind::prime_field: return "PRIME_FIELD";
    case FieldKind::ratfunc_tadic: return "RATFUNC_T_ADIC";
  }
  return "?";
}

FieldKind parse_field_kind(std::string_view name) {
  if (name == "RATIONAL_P_ADIC") return FieldKind::rational_padic;
  if (name == "PRIME_FIELD") return FieldKind::prime_field;
  if (name == "RATFUNC_T_ADIC") return FieldKind::ratfunc_tadic;
  throw Error(Errc::validation_error, "unknown field kind '" + std::string(name) + "'");
}

namespace {

std::uint32_t reduce_mod(const Integer& k, std::uint32_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

// Integer-coefficient polynomial in t, e.g. "3*t^2 - t + 1"; index i holds the t^i coefficient.
class TPolyParser {
 public:
  explicit TPolyParser(std::string_view s) : s_(s) {}

  std::vector<Integer> parse_all() {
    auto r = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

  std::vector<Integer> parse_expr() {
    std::vector<Integer> acc;
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      if (peek() == '(') {
        ++pos_;
        auto inner = parse_expr();
        expect(')');
        for (std::size_t i = 0; i < inner.size(); ++i) add_at(acc, i, sign * inner[i]);
      } else {
        auto [c, e] = parse_term();
        add_at(acc, e, sign * c);
      }
      first = false;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    return acc;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

 private:
  std::pair<Integer, std::size_t> parse_term() {
    Integer c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_uint();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return {c, 0};
      }
    }
    if (peek() != 't') {
      if (have_coeff) fail("expected 't' after '*'");
      fail("expected a term");
    }
    ++pos_;
    skip_ws();
    std::size_t e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      e = parse_uint().get_ui();
    }
    return {c, e};
  }

  Integer parse_uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  static void add_at(std::vector<Integer>& v, std::size_t i, const Integer& c) {
    if (v.size() <= i) v.resize(i + 1, 0);
    v[i] += c;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

FpPoly to_fp_poly(const std::vector<Integer>& coeffs, std::uint32_t p) {
  std::vector<std::uint32_t> v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = reduce_mod(coeffs[i], p);
  return FpPoly(std::move(v), p);
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::make(FieldKind kind, std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::validation_error, "p = " + std::to_string(p) + " is not prime");
  return FieldSpec(kind, p);
}

FieldSpec FieldSpec::rational_padic(std::uint32_t p) { return make(FieldKind::rational_padic, p); }
FieldSpec FieldSpec::prime_field(std::uint32_t p) { return make(FieldKind::prime_field, p); }
FieldSpec FieldSpec::ratfunc_tadic(std::uint32_t p) { return make(FieldKind::ratfunc_tadic, p); }

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::rational_padic: return "Q(|.|_" + std::to_string(p_) + ")";
    case FieldKind::prime_field: return "F_" + std::to_string(p_);
    case FieldKind::ratfunc_tadic: return "F_" + std::to_string(p_) + "(t)";
  }
  return "?";
}

RatFunc FieldSpec::make_ratfunc(FpPoly num, FpPoly den) const {
  FpPolyOps ops{p_};
  if (den.is_zero()) throw Error(Errc::division_by_zero, "zero denominator in F_p(t)");
  if (num.is_zero()) return RatFunc{FpPoly(), FpPoly::constant(1, p_)};
  FpPoly g = ops.monic_gcd(num, den);
  FpPoly q, r;
  ops.divmod(num, g, q, r);
  num = q;
  ops.divmod(den, g, q, r);
  den = q;
  std::uint32_t li = ops.inv(den.lead());
  return RatFunc{ops.scale(num, li), ops.scale(den, li)};
}

Coeff FieldSpec::zero() const { return from_int(0); }
Coeff FieldSpec::one() const { return from_int(1); }

Coeff FieldSpec::from_int(long long k) const {
  switch (kind_) {
    case FieldKind::rational_padic: return Coeff(Rational(static_cast<long>(k)));
    case FieldKind::prime_field: return Coeff(reduce_mod(Integer(static_cast<long>(k)), p_));
    case FieldKind::ratfunc_tadic:
      return Coeff(RatFunc{FpPoly::constant(reduce_mod(Integer(static_cast<long>(k)), p_), p_), FpPoly::constant(1, p_)});
  }
  return {};
}

Coeff FieldSpec::from_integer(const Integer& k) const {
  switch (kind_) {
    case FieldKind::rational_padic: return Coeff(Rational(k));
    case FieldKind::prime_field: return Coeff(reduce_mod(k, p_));
    case FieldKind::ratfunc_tadic:
      return Coeff(RatFunc{FpPoly::constant(reduce_mod(k, p_), p_), FpPoly::constant(1, p_)});
  }
  return {};
}

bool FieldSpec::is_zero(const Coeff& a) const {
  switch (kind_) {
    case FieldKind::rational_padic: return sgn(a.rational()) == 0;
    case FieldKind::prime_field: return a.residue() == 0;
    case FieldKind::ratfunc_tadic: return a.ratfunc().num.is_zero();
  }
  return false;
}

bool FieldSpec::is_one(const Coeff& a) const {
  switch (kind_) {
    case FieldKind::rational_padic: return a.rational() == 1;
    case FieldKind::prime_field: return a.residue() == 1;
    case FieldKind::ratfunc_tadic: {
      const auto& r = a.ratfunc();
      return r.num.degree() == 0 && r.num[0] == 1 && r.den.degree() == 0;
    }
  }
  return false;
}

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case FieldKind::rational_padic: return Coeff(Rational(a.rational() + b.rational()));
    case FieldKind::prime_field: return Coeff(FpPolyOps{p_}.add(a.residue(), b.residue()));
    case FieldKind::ratfunc_tadic: {
      FpPolyOps ops{p_};
      const auto& x = a.ratfunc();
      const auto& y = b.ratfunc();
      if (x.den == y.den) return Coeff(make_ratfunc(ops.add(x.num, y.num), x.den));
      return Coeff(make_ratfunc(ops.add(ops.mul(x.num, y.den), ops.mul(y.num, x.den)), ops.mul(x.den, y.den)));
    }
  }
  return {};
}

Coeff FieldSpec::neg(const Coeff& a) const {
  switch (kind_) {
    case FieldKind::rational_padic: return Coeff(Rational(-a.rational()));
    case FieldKind::prime_field: return Coeff(FpPolyOps{p_}.sub(0, a.residue()));
    case FieldKind::ratfunc_tadic: return Coeff(RatFunc{FpPolyOps{p_}.neg(a.ratfunc().num), a.ratfunc().den});
  }
  return {};
}

Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::rational_padic) return Coeff(Rational(a.rational() - b.rational()));
  if (kind_ == FieldKind::prime_field) return Coeff(FpPolyOps{p_}.sub(a.residue(), b.residue()));
  return add(a, neg(b));
}

Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case FieldKind::rational_padic: return Coeff(Rational(a.rational() * b.rational()));
    case FieldKind::prime_field: return Coeff(FpPolyOps{p_}.mul(a.residue(), b.residue()));
    case FieldKind::ratfunc_tadic: {
      FpPolyOps ops{p_};
      const auto& x = a.ratfunc();
      const auto& y = b.ratfunc();
      if (x.num.is_zero() || y.num.is_zero()) return zero();
      return Coeff(make_ratfunc(ops.mul(x.num, y.num), ops.mul(x.den, y.den)));
    }
  }
  return {};
}

Coeff FieldSpec::inv(const Coeff& a) const {
  if (is_zero(a)) throw Error(Errc::division_by_zero, "inverse of zero in " + name());
  switch (kind_) {
    case FieldKind::rational_padic: return Coeff(Rational(1 / a.rational()));
    case FieldKind::prime_field: return Coeff(FpPolyOps{p_}.inv(a.residue()));
    case FieldKind::ratfunc_tadic: return Coeff(make_ratfunc(a.ratfunc().den, a.ratfunc().num));
  }
  return {};
}

Coeff FieldSpec::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

Coeff FieldSpec::pow(const Coeff& a, unsigned e) const {
  Coeff result = one();
  Coeff base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

LogValue FieldSpec::log_abs(const Coeff& a) const {
  if (is_zero(a)) return LogValue::neg_infinity();
  switch (kind_) {
    case FieldKind::rational_padic: {
      const Rational& q = a.rational();
      long v = static_cast<long>(padic_valuation(q.get_num(), p_)) - static_cast<long>(padic_valuation(q.get_den(), p_));
      return LogValue(Rational(-v));
    }
    case FieldKind::prime_field: return LogValue(Rational(0));
    case FieldKind::ratfunc_tadic: {
      const auto& r = a.ratfunc();
      long ord = static_cast<long>(r.num.order_at_zero()) - static_cast<long>(r.den.order_at_zero());
      return LogValue(Rational(-ord));
    }
  }
  return {};
}

namespace {

// c_i t^(i p^s) -> c_i t^i; F_p coefficients are fixed by Frobenius.
std::optional<FpPoly> fp_poly_root(const FpPoly& a, std::uint64_t q, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i] == 0) continue;
    if (static_cast<std::uint64_t>(i) % q != 0) return std::nullopt;
    std::size_t j = i / q;
    if (out.size() <= j) out.resize(j + 1, 0);
    out[j] = a[i];
  }
  return FpPoly(std::move(out), p);
}

}  // namespace

bool FieldSpec::has_pth_root(const Coeff& a, unsigned s) const {
  if (kind_ == FieldKind::rational_padic)
    throw Error(Errc::wrong_characteristic, "p-th roots need positive characteristic");
  if (kind_ == FieldKind::prime_field) return true;
  std::uint64_t q = ipow(p_, s);
  return fp_poly_root(a.ratfunc().num, q, p_) && fp_poly_root(a.ratfunc().den, q, p_);
}

Coeff FieldSpec::pth_root(const Coeff& a, unsigned s) const {
  if (kind_ == FieldKind::rational_padic)
    throw Error(Errc::wrong_characteristic, "p-th roots need positive characteristic");
  if (kind_ == FieldKind::prime_field) return a;
  std::uint64_t q = ipow(p_, s);
  auto num = fp_poly_root(a.ratfunc().num, q, p_);
  auto den = fp_poly_root(a.ratfunc().den, q, p_);
  if (!num || !den)
    throw Error(Errc::not_a_pth_power, format(a) + " has no " + std::to_string(q) + "-th root in " + name());
  // Roots of a reduced fraction stay reduced, and a monic denominator has a monic root.
  return Coeff(RatFunc{*num, *den});
}

Coeff FieldSpec::parse(std::string_view text) const {
  switch (kind_) {
    case FieldKind::rational_padic: return Coeff(parse_rational(text));
    case FieldKind::prime_field: {
      Rational q = parse_rational(text);
      Coeff num = from_integer(q.get_num());
      Coeff den = from_integer(q.get_den());
      return div(num, den);
    }
    case FieldKind::ratfunc_tadic: {
      TPolyParser parser(text);
      auto num = parser.parse_expr();
      parser.skip_ws();
      std::vector<Integer> den{1};
      if (parser.peek() == '/') {
        parser.expect('/');
        den = parser.parse_expr();
      }
      parser.skip_ws();
      if (parser.pos() != text.size())
        throw Error(Errc::parse_error, "trailing characters in coefficient '" + std::string(text) + "'");
      return Coeff(make_ratfunc(to_fp_poly(num, p_), to_fp_poly(den, p_)));
    }
  }
  return {};
}

std::string FieldSpec::format(const Coeff& a) const {
  switch (kind_) {
    case FieldKind::rational_padic: return to_string(a.rational());
    case FieldKind::prime_field: return std::to_string(a.residue());
    case FieldKind::ratfunc_tadic: {
      const auto& r = a.ratfunc();
      std::string num = format_fp_poly(r.num);
      if (r.den.degree() == 0) return num;
      return "(" + num + ")/(" + format_fp_poly(r.den) + ")";
    }
  }
  return "?";
}

}  // namespace nabc
