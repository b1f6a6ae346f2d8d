#include "nabc/monomial.hpp"

#include <algorithm>
#include <cassert>

#include "nabc/error.hpp"

namespace nabc {

Monomial::Monomial(unsigned m) : m_(static_cast<std::uint8_t>(m)) {
  if (m > kMaxVars) throw Error(Errc::dimension_mismatch, "at most " + std::to_string(kMaxVars) + " variables");
}

Monomial::Monomial(const std::vector<unsigned>& exps) : Monomial(static_cast<unsigned>(exps.size())) {
  for (unsigned i = 0; i < exps.size(); ++i) {
    e_[i] = exps[i];
    deg_ += exps[i];
  }
}

Monomial Monomial::unit(unsigned m, unsigned var, unsigned e) {
  Monomial r(m);
  r.set(var, e);
  return r;
}

void Monomial::set(unsigned i, std::uint32_t e) {
  assert(i < m_);
  deg_ = deg_ - e_[i] + e;
  e_[i] = e;
}

std::uint32_t Monomial::max_component() const {
  return m_ == 0 ? 0 : *std::max_element(e_.begin(), e_.begin() + m_);
}

bool Monomial::divides(const Monomial& other) const {
  for (unsigned i = 0; i < m_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

std::vector<unsigned> Monomial::to_vector() const { return std::vector<unsigned>(e_.begin(), e_.begin() + m_); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.m_ == b.m_);
  Monomial r = a;
  for (unsigned i = 0; i < a.m_; ++i) r.e_[i] += b.e_[i];
  r.deg_ += b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r = a;
  for (unsigned i = 0; i < a.m_; ++i) r.e_[i] -= b.e_[i];
  r.deg_ -= b.deg_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
  return std::strong_ordering::equal;
}

namespace {

void fill_degree(unsigned m, unsigned var, unsigned left, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == m) {
    cur.set(var, left);
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur.set(var, e);
    fill_degree(m, var + 1, left - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(unsigned m, unsigned d) {
  std::vector<Monomial> out;
  if (m == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(m);
  fill_degree(m, 0, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> default_var_names(unsigned m) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < m; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

std::string format_monomial(const Monomial& mono, const std::vector<std::string>& names) {
  if (mono.is_one()) return "1";
  auto vars = names.empty() ? default_var_names(mono.nvars()) : names;
  std::string out;
  for (unsigned i = 0; i < mono.nvars(); ++i) {
    if (mono[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
  }
  return out;
}

}  // namespace nabc
