#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nabc {

inline constexpr unsigned kMaxVars = 8;

/// Exponent vector z^gamma in m <= kMaxVars variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(unsigned m);
  /// Throws DIMENSION_MISMATCH if exps.size() > kMaxVars.
  explicit Monomial(const std::vector<unsigned>& exps);

  static Monomial unit(unsigned m, unsigned var, unsigned e = 1);

  unsigned nvars() const { return m_; }
  std::uint32_t operator[](unsigned i) const { return e_[i]; }
  void set(unsigned i, std::uint32_t e);
  unsigned total_degree() const { return deg_; }
  std::uint32_t max_component() const;
  bool is_one() const { return deg_ == 0; }

  /// this <= other componentwise.
  bool divides(const Monomial& other) const;
  std::vector<unsigned> to_vector() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Componentwise difference; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
  /// Graded lexicographic: total degree first, then z_1 most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint8_t m_ = 0;
  std::uint32_t deg_ = 0;
};

/// Every exponent vector of total degree exactly d in m variables, ascending grlex.
std::vector<Monomial> monomials_of_degree(unsigned m, unsigned d);

/// "z1^2*z3" style, "1" for the unit; names default to z1..zm.
std::string format_monomial(const Monomial& mono, const std::vector<std::string>& names = {});

std::vector<std::string> default_var_names(unsigned m);

}  // namespace nabc
