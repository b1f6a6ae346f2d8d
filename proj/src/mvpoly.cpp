#include "nabc/mvpoly.hpp"

#include <algorithm>

#include "nabc/error.hpp"

namespace nabc {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

MvPoly MvPoly::from_terms(const FieldSpec& field, unsigned m, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    if (terms[i].mono.nvars() != m) throw Error(Errc::dimension_mismatch, "monomial arity differs from polynomial arity");
    std::size_t j = i + 1;
    Coeff c = std::move(terms[i].coeff);
    for (; j < terms.size() && terms[j].mono == terms[i].mono; ++j) c = field.add(c, terms[j].coeff);
    if (!field.is_zero(c)) out.push_back({terms[i].mono, std::move(c)});
    i = j;
  }
  return from_sorted_terms(field, m, std::move(out));
}

MvPoly MvPoly::from_sorted_terms(const FieldSpec& field, unsigned m, std::vector<Term> terms) {
  MvPoly r(field, m);
  r.terms_ = std::move(terms);
  return r;
}

MvPoly MvPoly::constant(const FieldSpec& field, unsigned m, const Coeff& c) { return monomial(field, m, Monomial(m), c); }

MvPoly MvPoly::one(const FieldSpec& field, unsigned m) { return constant(field, m, field.one()); }

MvPoly MvPoly::variable(const FieldSpec& field, unsigned m, unsigned var) {
  return monomial(field, m, Monomial::unit(m, var), field.one());
}

MvPoly MvPoly::monomial(const FieldSpec& field, unsigned m, const Monomial& mono, const Coeff& c) {
  MvPoly r(field, m);
  if (!field.is_zero(c)) r.terms_.push_back({mono, c});
  return r;
}

bool MvPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && field_.is_one(terms_[0].coeff); }

int MvPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.total_degree()); }

int MvPoly::min_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.total_degree()); }

int MvPoly::degree_in(unsigned var) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return static_cast<int>(d);
}

Coeff MvPoly::coeff_of(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& x) { return t.mono > x; });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return field_.zero();
}

MvPoly MvPoly::operator-() const {
  MvPoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

MvPoly MvPoly::scale(const Coeff& c) const {
  if (field_.is_zero(c)) return MvPoly(field_, m_);
  MvPoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

MvPoly MvPoly::mul_monomial(const Monomial& mono) const {
  MvPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * mono;
  return r;
}

MvPoly MvPoly::pow(unsigned e) const {
  MvPoly result = one(field_, m_);
  MvPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MvPoly MvPoly::monic() const {
  if (is_zero() || field_.is_one(lead().coeff)) return *this;
  return scale(field_.inv(lead().coeff));
}

void MvPoly::check_compatible(const MvPoly& b) const {
  if (!(field_ == b.field_)) throw Error(Errc::spec_mismatch, field_.name() + " vs " + b.field_.name());
  if (m_ != b.m_)
    throw Error(Errc::spec_mismatch, std::to_string(m_) + " vs " + std::to_string(b.m_) + " variables");
}

namespace {

MvPoly merge(const MvPoly& a, const MvPoly& b, bool subtract) {
  const FieldSpec& F = a.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono > y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono > x[i].mono) {
      out.push_back({y[j].mono, subtract ? F.neg(y[j].coeff) : y[j].coeff});
      ++j;
    } else {
      Coeff c = subtract ? F.sub(x[i].coeff, y[j].coeff) : F.add(x[i].coeff, y[j].coeff);
      if (!F.is_zero(c)) out.push_back({x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return MvPoly::from_sorted_terms(F, a.nvars(), std::move(out));
}

}  // namespace

MvPoly operator+(const MvPoly& a, const MvPoly& b) {
  a.check_compatible(b);
  return merge(a, b, false);
}

MvPoly operator-(const MvPoly& a, const MvPoly& b) {
  a.check_compatible(b);
  return merge(a, b, true);
}

MvPoly operator*(const MvPoly& a, const MvPoly& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return MvPoly(a.field_, a.m_);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, a.field_.mul(s.coeff, t.coeff)});
  return MvPoly::from_terms(a.field_, a.m_, std::move(out));
}

bool operator==(const MvPoly& a, const MvPoly& b) {
  if (!(a.field_ == b.field_) || a.m_ != b.m_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

MvPoly product(const std::vector<MvPoly>& fs, const FieldSpec& field, unsigned m) {
  MvPoly r = MvPoly::one(field, m);
  for (const auto& f : fs) r *= f;
  return r;
}

MvPoly sum(const std::vector<MvPoly>& fs, const FieldSpec& field, unsigned m) {
  MvPoly r(field, m);
  for (const auto& f : fs) r += f;
  return r;
}

std::optional<MvPoly> try_div(const MvPoly& f, const MvPoly& g) {
  if (g.is_zero()) throw Error(Errc::division_by_zero_poly, "division by the zero polynomial");
  const FieldSpec& F = f.field();
  if (f.is_zero()) return MvPoly(F, f.nvars());
  if (f.total_degree() < g.total_degree()) return std::nullopt;
  for (unsigned v = 0; v < f.nvars(); ++v)
    if (f.degree_in(v) < g.degree_in(v)) return std::nullopt;
  const Term& lg = g.lead();
  Coeff inv_lc = F.inv(lg.coeff);
  std::vector<Term> q;
  MvPoly r = f;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    Term t{lr.mono / lg.mono, F.mul(lr.coeff, inv_lc)};
    r = r - g.mul_monomial(t.mono).scale(t.coeff);
    q.push_back(std::move(t));
  }
  return MvPoly::from_terms(F, f.nvars(), std::move(q));
}

MvPoly exact_div(const MvPoly& f, const MvPoly& g) {
  auto q = try_div(f, g);
  if (!q) throw Error(Errc::not_divisible, "divisor does not divide the dividend");
  return *q;
}

bool divides(const MvPoly& g, const MvPoly& f) { return try_div(f, g).has_value(); }

MvPoly partial(const MvPoly& f, unsigned var) {
  const FieldSpec& F = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Monomial mono = t.mono;
    mono.set(var, e - 1);
    out.push_back({mono, F.mul(t.coeff, F.from_int(e))});
  }
  return MvPoly::from_terms(F, f.nvars(), std::move(out));
}

}  // namespace nabc
