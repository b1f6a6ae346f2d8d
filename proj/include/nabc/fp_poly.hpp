#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nabc {

/// Dense univariate polynomial over F_p, coefficient of t^i at index i.
/// Always trimmed: no trailing zeros, so the zero polynomial is empty.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::vector<std::uint32_t> coeffs, std::uint32_t p);

  static FpPoly constant(std::uint32_t c, std::uint32_t p);
  static FpPoly monomial(std::uint32_t c, unsigned degree, std::uint32_t p);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t lead() const { return c_.back(); }
  std::uint32_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  /// Index of the lowest nonzero coefficient; requires nonzero.
  unsigned order_at_zero() const;

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  std::vector<std::uint32_t> c_;
  void trim();
  friend struct FpPolyOps;
};

/// Arithmetic needs the modulus; callers pass p explicitly.
struct FpPolyOps {
  std::uint32_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((a + std::uint64_t(b)) % p); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((a + std::uint64_t(p) - b) % p); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p); }
  std::uint32_t inv(std::uint32_t a) const;

  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly neg(const FpPoly& a) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly scale(const FpPoly& a, std::uint32_t c) const;
  /// Quotient and remainder; b nonzero.
  void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const;
  FpPoly monic_gcd(FpPoly a, FpPoly b) const;
  FpPoly make_monic(const FpPoly& a) const;
};

std::string format_fp_poly(const FpPoly& a, const std::string& var = "t");

}  // namespace nabc
