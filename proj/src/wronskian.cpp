#include "nabc/wronskian.hpp"

#include <algorithm>
#include <map>

#include "nabc/error.hpp"
#include "nabc/hasse.hpp"
#include "nabc/linalg.hpp"

namespace nabc {

namespace {

std::vector<MvPoly> derivative_row(const std::vector<MvPoly>& fs, const Monomial& gamma) {
  std::vector<MvPoly> row;
  for (const auto& f : fs) row.push_back(hasse_derivative(f, gamma));
  return row;
}

int max_total_degree(const std::vector<MvPoly>& fs) {
  int d = 0;
  for (const auto& f : fs) d = std::max(d, f.total_degree());
  return d;
}

void require_char_p(const std::vector<MvPoly>& fs) {
  if (fs.empty() || fs.front().field().characteristic() == 0)
    throw Error(Errc::wrong_characteristic, "the index of independence is defined in characteristic p");
}

Monomial scaled(const Monomial& mu, std::uint32_t q) {
  Monomial r(mu.nvars());
  for (unsigned i = 0; i < mu.nvars(); ++i) r.set(i, mu[i] * q);
  return r;
}

/// Rows g_{j,beta}(w) of the residue decomposition at q = p^s.
PolyMatrix residue_matrix(const std::vector<MvPoly>& fs, std::uint32_t q) {
  const FieldSpec& F = fs.front().field();
  unsigned m = fs.front().nvars();
  std::map<Monomial, std::size_t> column;
  for (const auto& f : fs)
    for (const auto& t : f.terms()) {
      Monomial beta(m);
      for (unsigned i = 0; i < m; ++i) beta.set(i, t.mono[i] % q);
      column.emplace(beta, 0);
    }
  std::size_t k = 0;
  for (auto& [beta, idx] : column) idx = k++;
  PolyMatrix A;
  for (const auto& f : fs) {
    std::vector<std::vector<Term>> cells(column.size());
    for (const auto& t : f.terms()) {
      Monomial beta(m), mu(m);
      for (unsigned i = 0; i < m; ++i) {
        beta.set(i, t.mono[i] % q);
        mu.set(i, t.mono[i] / q);
      }
      cells[column[beta]].push_back({mu, t.coeff});
    }
    std::vector<MvPoly> row;
    for (auto& c : cells) row.push_back(MvPoly::from_terms(F, m, std::move(c)));
    A.push_back(std::move(row));
  }
  return A;
}

PolyMatrix select_rows(const PolyMatrix& A, const std::vector<std::size_t>& rows) {
  PolyMatrix out;
  for (auto r : rows) out.push_back(A[r]);
  return out;
}

PolyMatrix select_cols(const PolyMatrix& A, const std::vector<std::size_t>& cols) {
  PolyMatrix out;
  for (const auto& row : A) {
    std::vector<MvPoly> r;
    for (auto c : cols) r.push_back(row[c]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

MvPoly gen_wronskian(const std::vector<MvPoly>& fs, const std::vector<Monomial>& gammas) {
  if (fs.empty() || fs.size() != gammas.size())
    throw Error(Errc::dimension_mismatch, std::to_string(fs.size()) + " functions but " + std::to_string(gammas.size()) +
                                              " multi-indices");
  PolyMatrix M;
  for (const auto& g : gammas) M.push_back(derivative_row(fs, g));
  return bareiss_det(std::move(M), fs.front().field(), fs.front().nvars());
}

WronskianCertificate find_certificate(const std::vector<MvPoly>& fs, unsigned step_c) {
  if (fs.empty()) throw Error(Errc::dimension_mismatch, "no functions");
  std::size_t n = fs.size();
  if (coeff_rank(fs) < n) throw Error(Errc::not_f_independent, "the functions are linearly dependent over the field");
  unsigned m = fs.front().nvars();
  int top = max_total_degree(fs);
  std::vector<Monomial> gammas{Monomial(m)};
  PolyMatrix rows{fs};
  for (std::size_t i = 1; i < n; ++i) {
    unsigned limit = gammas.back().total_degree() + step_c;
    bool found = false;
    for (unsigned d = 1; d <= limit && static_cast<int>(d) <= top && !found; ++d) {
      for (const auto& gamma : monomials_of_degree(m, d)) {
        if (std::find(gammas.begin(), gammas.end(), gamma) != gammas.end()) continue;
        auto row = derivative_row(fs, gamma);
        if (std::all_of(row.begin(), row.end(), [](const MvPoly& g) { return g.is_zero(); })) continue;
        rows.push_back(row);
        if (poly_rank(rows) == i + 1) {
          gammas.push_back(gamma);
          found = true;
          break;
        }
        rows.pop_back();
      }
    }
    if (!found)
      throw Error(Errc::search_exhausted, "no multi-index with |gamma| <= " + std::to_string(limit) +
                                              " raises the Wronskian rank beyond " + std::to_string(i));
  }
  WronskianCertificate cert{fs, gammas, step_c, gen_wronskian(fs, gammas)};
  if (cert.determinant.is_zero()) throw Error(Errc::invariant_violated, "full-rank derivative matrix with zero determinant");
  return cert;
}

bool check_certificate(const WronskianCertificate& cert) {
  if (cert.gammas.empty() || !cert.gammas.front().is_one()) return false;
  for (std::size_t i = 1; i < cert.gammas.size(); ++i)
    if (cert.gammas[i].total_degree() > cert.gammas[i - 1].total_degree() + cert.step_c) return false;
  MvPoly det = gen_wronskian(cert.functions, cert.gammas);
  return !det.is_zero() && det == cert.determinant;
}

bool independent_over_powers(const std::vector<MvPoly>& fs, unsigned s) {
  if (fs.empty()) return true;
  std::uint32_t q = static_cast<std::uint32_t>(ipow(fs.front().field().p(), s));
  return poly_rank(residue_matrix(fs, q)) == fs.size();
}

std::optional<std::vector<MvPoly>> power_relation(const std::vector<MvPoly>& fs, unsigned s) {
  if (independent_over_powers(fs, s)) return std::nullopt;
  const FieldSpec& F = fs.front().field();
  unsigned m = fs.front().nvars();
  std::uint32_t q = static_cast<std::uint32_t>(ipow(F.p(), s));
  PolyMatrix A = residue_matrix(fs, q);

  // Shrink to a minimal dependent set of rows.
  std::vector<std::size_t> T;
  for (std::size_t i = 0; i < fs.size(); ++i) T.push_back(i);
  for (std::size_t k = 0; k < T.size();) {
    std::vector<std::size_t> smaller = T;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
    if (poly_rank(select_rows(A, smaller)) < smaller.size())
      T = std::move(smaller);
    else
      ++k;
  }
  PolyMatrix AT = select_rows(A, T);
  std::size_t r = T.size() - 1;
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < AT.front().size() && cols.size() < r; ++c) {
    cols.push_back(c);
    if (poly_rank(select_cols(AT, cols)) < cols.size()) cols.pop_back();
  }
  PolyMatrix B = select_cols(AT, cols);

  std::vector<MvPoly> Q(fs.size(), MvPoly(F, m));
  for (std::size_t k = 0; k < T.size(); ++k) {
    PolyMatrix minor;
    for (std::size_t i = 0; i < T.size(); ++i)
      if (i != k) minor.push_back(B[i]);
    MvPoly d = bareiss_det(std::move(minor), F, m);
    std::vector<Term> terms;
    for (const auto& t : d.terms()) terms.push_back({scaled(t.mono, q), t.coeff});
    MvPoly qk = MvPoly::from_terms(F, m, std::move(terms));
    Q[T[k]] = k % 2 ? -qk : qk;
  }
  MvPoly check(F, m);
  for (std::size_t j = 0; j < fs.size(); ++j) check += Q[j] * fs[j];
  if (!check.is_zero()) throw Error(Errc::invariant_violated, "Cramer relation does not annihilate the functions");
  return Q;
}

std::optional<std::vector<MvPoly>> syzygy_relation(const std::vector<MvPoly>& fs, unsigned s, unsigned degree_bound) {
  if (fs.empty()) return std::nullopt;
  const FieldSpec& F = fs.front().field();
  unsigned m = fs.front().nvars();
  std::uint32_t q = static_cast<std::uint32_t>(ipow(F.p(), s));
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  std::vector<MvPoly> products;
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (unsigned d = 0; d * q <= degree_bound; ++d)
      for (const auto& mu : monomials_of_degree(m, d)) {
        Monomial shift = scaled(mu, q);
        unknowns.emplace_back(j, shift);
        products.push_back(fs[j].mul_monomial(shift));
      }
  auto x = left_kernel_vector(F, coefficient_matrix(products));
  if (!x) return std::nullopt;
  std::vector<std::vector<Term>> terms(fs.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (!F.is_zero((*x)[u])) terms[unknowns[u].first].push_back({unknowns[u].second, (*x)[u]});
  std::vector<MvPoly> Q;
  for (auto& t : terms) Q.push_back(MvPoly::from_terms(F, m, std::move(t)));
  return Q;
}

IndependenceResult index_of_independence(const std::vector<MvPoly>& fs) {
  require_char_p(fs);
  if (coeff_rank(fs) < fs.size()) throw Error(Errc::not_f_independent, "the functions are linearly dependent over the field");
  std::uint32_t p = fs.front().field().p();
  IndependenceResult result;
  std::uint64_t top = static_cast<std::uint64_t>(max_total_degree(fs));
  result.s_max = 1;
  while (ipow(p, result.s_max) <= top) ++result.s_max;
  result.index_s = result.s_max;
  for (unsigned s = 1; s < result.s_max; ++s)
    if (independent_over_powers(fs, s)) {
      result.index_s = s;
      break;
    }
  if (result.index_s > 1) result.witness = power_relation(fs, result.index_s - 1);
  return result;
}

unsigned collection_index(const std::vector<MvPoly>& fs) {
  if (fs.empty() || fs.front().field().characteristic() == 0) return 1;
  std::size_t n = fs.size();
  if (n > 12) throw Error(Errc::guard_exceeded, "subset enumeration is capped at n <= 12");
  unsigned d = coeff_rank(fs);
  unsigned best = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != d) continue;
    std::vector<MvPoly> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(fs[i]);
    if (coeff_rank(sub) < d) continue;
    best = std::max(best, index_of_independence(sub).index_s);
  }
  return best;
}

}  // namespace nabc
