#include "nabc/factor_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_set>

#include "nabc/error.hpp"
#include "nabc/poly_text.hpp"

namespace nabc {

namespace {

std::string residue_key(const MvPoly& f) {
  std::string key;
  for (const auto& t : f.terms()) {
    for (unsigned i = 0; i < f.nvars(); ++i) key += std::to_string(t.mono[i]) + ",";
    key += ":" + std::to_string(t.coeff.residue()) + ";";
  }
  return key;
}

/// Monomials of total degree <= d, ascending grlex.
std::vector<Monomial> monomials_up_to(unsigned m, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto level = monomials_of_degree(m, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Every monic polynomial of total degree exactly d.
std::vector<MvPoly> monic_of_degree(const FieldSpec& F, unsigned m, unsigned d) {
  auto monos = monomials_up_to(m, d);
  std::vector<MvPoly> out;
  std::uint32_t p = F.p();
  for (std::size_t lead = 0; lead < monos.size(); ++lead) {
    if (monos[lead].total_degree() != d) continue;
    std::vector<std::uint32_t> digits(lead, 0);
    while (true) {
      std::vector<Term> terms{{monos[lead], F.one()}};
      for (std::size_t i = 0; i < lead; ++i)
        if (digits[i]) terms.push_back({monos[i], Coeff(digits[i])});
      out.push_back(MvPoly::from_terms(F, m, std::move(terms)));
      std::size_t i = 0;
      while (i < lead && ++digits[i] == p) digits[i++] = 0;
      if (i == lead) break;
    }
  }
  return out;
}

struct Catalogue {
  std::vector<MvPoly> irreducibles;
};

std::mutex g_catalogue_mutex;
std::map<std::tuple<std::uint32_t, unsigned, unsigned>, Catalogue> g_catalogues;

Catalogue build_catalogue(const FieldSpec& F, unsigned m, unsigned max_degree) {
  Catalogue cat;
  std::vector<std::vector<MvPoly>> monic(max_degree + 1);
  std::vector<std::vector<MvPoly>> irred(max_degree + 1);
  for (unsigned d = 1; d <= max_degree; ++d) {
    monic[d] = monic_of_degree(F, m, d);
    std::unordered_set<std::string> reducible;
    for (unsigned i = 1; 2 * i <= d; ++i)
      for (const auto& a : irred[i])
        for (const auto& b : monic[d - i]) reducible.insert(residue_key(a * b));
    for (const auto& f : monic[d])
      if (!reducible.count(residue_key(f))) irred[d].push_back(f);
    cat.irreducibles.insert(cat.irreducibles.end(), irred[d].begin(), irred[d].end());
  }
  return cat;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return out;
}

int sole_variable(const MvPoly& f) {
  int var = -1;
  for (const auto& t : f.terms())
    for (unsigned i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var != -1 && var != static_cast<int>(i)) return -2;
      var = static_cast<int>(i);
    }
  return var;
}

/// Monic linear factors z - r with r rational, for a univariate polynomial over Q.
std::vector<MvPoly> rational_linear_factors(const MvPoly& f, unsigned var) {
  const FieldSpec& F = f.field();
  Integer lcm_den = 1;
  for (const auto& t : f.terms())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
  Integer a0 = 0, an = 0;
  for (const auto& t : f.terms()) {
    Rational scaled = t.coeff.rational() * lcm_den;
    if (t.mono[var] == 0) a0 = scaled.get_num();
    if (static_cast<int>(t.mono[var]) == f.total_degree()) an = scaled.get_num();
  }
  std::vector<MvPoly> out;
  if (a0 == 0 || abs(a0) > 1000000 || abs(an) > 1000000) return out;
  MvPoly z = MvPoly::variable(F, f.nvars(), var);
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an))
      for (int sign : {1, -1}) {
        Rational r(Integer(num * sign), den);
        r.canonicalize();
        MvPoly cand = z - MvPoly::constant(F, f.nvars(), Coeff(r));
        if (std::none_of(out.begin(), out.end(), [&](const MvPoly& g) { return g == cand; }) && divides(cand, f))
          out.push_back(cand);
      }
  return out;
}

/// Degree 1 in z_var with a constant coefficient on z_var.
bool linear_in_some_variable(const MvPoly& f) {
  for (unsigned v = 0; v < f.nvars(); ++v) {
    if (f.degree_in(v) != 1) continue;
    bool constant_coeff = true;
    for (const auto& t : f.terms())
      if (t.mono[v] == 1 && t.mono.total_degree() != 1) constant_coeff = false;
    if (constant_coeff) return true;
  }
  return false;
}

void absorb(std::vector<Factor>& out, MvPoly& rest, const MvPoly& cand) {
  unsigned e = 0;
  while (auto q = try_div(rest, cand)) {
    rest = std::move(*q);
    ++e;
  }
  if (e) out.push_back({cand.monic(), e});
}

}  // namespace

unsigned catalogue_degree(std::uint32_t p, unsigned m, std::size_t budget) {
  unsigned best = 0;
  for (unsigned D = 1; D <= 16; ++D) {
    auto monos = monomials_up_to(m, D);
    double count = 0;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (monos[i].total_degree() >= 1) count += std::pow(static_cast<double>(p), static_cast<double>(i));
    if (count > static_cast<double>(budget)) break;
    best = D;
  }
  return best;
}

const std::vector<MvPoly>& prime_field_irreducibles(const FieldSpec& field, unsigned m, unsigned max_degree) {
  std::lock_guard<std::mutex> lock(g_catalogue_mutex);
  auto key = std::make_tuple(field.p(), m, max_degree);
  auto it = g_catalogues.find(key);
  if (it == g_catalogues.end()) it = g_catalogues.emplace(key, build_catalogue(field, m, max_degree)).first;
  return it->second.irreducibles;
}

std::vector<Factor> squarefree_factor_oracle(const MvPoly& f, const OracleOptions& opts) {
  if (f.is_zero()) throw Error(Errc::zero_poly, "factorization of the zero polynomial");
  if (f.total_degree() > static_cast<int>(opts.degree_cap))
    throw Error(Errc::degree_too_large, "total degree " + std::to_string(f.total_degree()) + " exceeds oracle cap " +
                                            std::to_string(opts.degree_cap));
  const FieldSpec& F = f.field();
  unsigned m = f.nvars();
  std::vector<Factor> out;
  MvPoly rest = f;

  for (unsigned v = 0; v < m; ++v) absorb(out, rest, MvPoly::variable(F, m, v));

  unsigned D = 0;
  if (F.kind() == FieldKind::prime_field && !rest.is_constant()) {
    D = catalogue_degree(F.p(), m, opts.catalogue_budget);
    for (const auto& P : prime_field_irreducibles(F, m, D)) {
      if (P.total_degree() > rest.total_degree()) break;
      if (P.total_degree() == 1 && P.size() == 1) continue;
      absorb(out, rest, P);
    }
  }
  for (const auto& h : opts.hints) {
    if (h.is_constant() || rest.is_constant()) continue;
    absorb(out, rest, h.monic());
  }
  if (F.kind() == FieldKind::rational_padic && !rest.is_constant()) {
    int var = sole_variable(rest);
    if (var >= 0)
      for (const auto& L : rational_linear_factors(rest, static_cast<unsigned>(var))) absorb(out, rest, L);
  }

  if (!rest.is_constant()) {
    int d = rest.total_degree();
    bool certified = d == 1 || linear_in_some_variable(rest);
    if (!certified && F.kind() == FieldKind::prime_field) certified = d < 2 * static_cast<int>(D + 1);
    if (!certified && F.kind() == FieldKind::rational_padic && sole_variable(rest) >= 0 && d <= 3)
      certified = rational_linear_factors(rest, static_cast<unsigned>(sole_variable(rest))).empty();
    if (!certified)
      throw Error(Errc::degree_too_large, "cannot certify the cofactor " + format_poly(rest) + " as irreducible");
    out.push_back({rest.monic(), 1});
  }

  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.total_degree() != b.poly.total_degree()) return a.poly.total_degree() < b.poly.total_degree();
    return format_poly(a.poly) < format_poly(b.poly);
  });
  return out;
}

}  // namespace nabc
