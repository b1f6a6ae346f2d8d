#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabc/field.hpp"
#include "nabc/monomial.hpp"

namespace nabc {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial in m variables over a FieldSpec.
/// Terms are kept in descending graded-lex order with no zero coefficients.
class MvPoly {
 public:
  MvPoly() = default;
  MvPoly(const FieldSpec& field, unsigned m) : field_(field), m_(m) {}

  /// Merges like terms and drops zeros; terms may arrive in any order.
  static MvPoly from_terms(const FieldSpec& field, unsigned m, std::vector<Term> terms);
  /// Terms already strictly descending and zero-free.
  static MvPoly from_sorted_terms(const FieldSpec& field, unsigned m, std::vector<Term> terms);
  static MvPoly constant(const FieldSpec& field, unsigned m, const Coeff& c);
  static MvPoly one(const FieldSpec& field, unsigned m);
  static MvPoly variable(const FieldSpec& field, unsigned m, unsigned var);
  static MvPoly monomial(const FieldSpec& field, unsigned m, const Monomial& mono, const Coeff& c);

  const FieldSpec& field() const { return field_; }
  unsigned nvars() const { return m_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Largest total degree among terms; smallest is min_degree (zero poly: -1).
  int min_degree() const;
  int degree_in(unsigned var) const;
  /// Graded-lex leading term; requires nonzero.
  const Term& lead() const { return terms_.front(); }
  Coeff coeff_of(const Monomial& mono) const;

  MvPoly operator-() const;
  MvPoly scale(const Coeff& c) const;
  MvPoly mul_monomial(const Monomial& mono) const;
  MvPoly pow(unsigned e) const;
  /// Leading coefficient becomes 1; zero stays zero.
  MvPoly monic() const;

  friend MvPoly operator+(const MvPoly& a, const MvPoly& b);
  friend MvPoly operator-(const MvPoly& a, const MvPoly& b);
  friend MvPoly operator*(const MvPoly& a, const MvPoly& b);
  MvPoly& operator+=(const MvPoly& b) { return *this = *this + b; }
  MvPoly& operator-=(const MvPoly& b) { return *this = *this - b; }
  MvPoly& operator*=(const MvPoly& b) { return *this = *this * b; }

  friend bool operator==(const MvPoly& a, const MvPoly& b);

 private:
  FieldSpec field_;
  unsigned m_ = 0;
  std::vector<Term> terms_;

  void check_compatible(const MvPoly& b) const;
};

MvPoly product(const std::vector<MvPoly>& fs, const FieldSpec& field, unsigned m);
MvPoly sum(const std::vector<MvPoly>& fs, const FieldSpec& field, unsigned m);

/// q with f = g*q, or nullopt when g does not divide f. Throws DIVISION_BY_ZERO_POLY.
std::optional<MvPoly> try_div(const MvPoly& f, const MvPoly& g);
/// Throws NOT_DIVISIBLE or DIVISION_BY_ZERO_POLY.
MvPoly exact_div(const MvPoly& f, const MvPoly& g);
bool divides(const MvPoly& g, const MvPoly& f);

/// Monic (graded-lex) greatest common divisor; gcd(f, 0) = monic(f). Throws BOTH_ZERO.
MvPoly gcd(const MvPoly& f, const MvPoly& g);
MvPoly gcd(const std::vector<MvPoly>& fs);
/// Throws ZERO_INPUT.
MvPoly lcm(const MvPoly& f, const MvPoly& g);
/// Largest e with P^e | f. Throws ZERO_POLY or CONSTANT_DIVISOR.
unsigned multiplicity(const MvPoly& f, const MvPoly& P);

/// Formal partial derivative in z_var.
MvPoly partial(const MvPoly& f, unsigned var);

/// Content of f viewed as a polynomial in z_var (monic gcd of its coefficients).
MvPoly content_in(const MvPoly& f, unsigned var);

}  // namespace nabc
