#include "nabc/fp_poly.hpp"

#include <cassert>

#include "nabc/error.hpp"

namespace nabc {

FpPoly::FpPoly(std::vector<std::uint32_t> coeffs, std::uint32_t p) : c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t c, std::uint32_t p) { return FpPoly({c}, p); }

FpPoly FpPoly::monomial(std::uint32_t c, unsigned degree, std::uint32_t p) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(std::move(v), p);
}

unsigned FpPoly::order_at_zero() const {
  assert(!c_.empty());
  unsigned i = 0;
  while (c_[i] == 0) ++i;
  return i;
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t FpPolyOps::inv(std::uint32_t a) const {
  if (a % p == 0) throw Error(Errc::division_by_zero, "inverse of 0 in F_" + std::to_string(p));
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

FpPoly FpPolyOps::add(const FpPoly& a, const FpPoly& b) const {
  std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = add(a[i], b[i]);
  return FpPoly(std::move(r), p);
}

FpPoly FpPolyOps::sub(const FpPoly& a, const FpPoly& b) const {
  std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = sub(a[i], b[i]);
  return FpPoly(std::move(r), p);
}

FpPoly FpPolyOps::neg(const FpPoly& a) const { return sub(FpPoly(), a); }

FpPoly FpPolyOps::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p;
  }
  std::vector<std::uint32_t> r(acc.begin(), acc.end());
  return FpPoly(std::move(r), p);
}

FpPoly FpPolyOps::scale(const FpPoly& a, std::uint32_t c) const {
  std::vector<std::uint32_t> r = a.c_;
  for (auto& x : r) x = mul(x, c);
  return FpPoly(std::move(r), p);
}

void FpPolyOps::divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by the zero polynomial in F_p[t]");
  std::vector<std::uint32_t> rem = a.c_;
  int db = b.degree();
  std::uint32_t inv_lead = inv(b.lead());
  std::vector<std::uint32_t> quo(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    std::uint32_t c = mul(rem[i], inv_lead);
    if (c == 0) continue;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = sub(rem[i - db + j], mul(c, b.c_[j]));
  }
  q = FpPoly(std::move(quo), p);
  r = FpPoly(std::move(rem), p);
}

FpPoly FpPolyOps::make_monic(const FpPoly& a) const {
  if (a.is_zero()) return a;
  return scale(a, inv(a.lead()));
}

FpPoly FpPolyOps::monic_gcd(FpPoly a, FpPoly b) const {
  while (!b.is_zero()) {
    FpPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::string format_fp_poly(const FpPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    std::uint32_t c = a[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace nabc
