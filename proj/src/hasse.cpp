#include "nabc/hasse.hpp"

#include "nabc/error.hpp"

namespace nabc {

namespace {

/// binom(n, k) mod p by Lucas' theorem.
std::uint32_t lucas_binom(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  std::uint64_t result = 1;
  while (n || k) {
    std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), ni, ki);
    result = result * mpz_fdiv_ui(b.get_mpz_t(), p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

void require_char_p(const MvPoly& f) {
  if (f.field().characteristic() == 0)
    throw Error(Errc::wrong_characteristic, "p^s-th powers are only meaningful in characteristic p");
}

}  // namespace

Coeff multinomial(const Monomial& alpha, const Monomial& beta, const FieldSpec& field) {
  if (alpha.nvars() != beta.nvars()) throw Error(Errc::dimension_mismatch, "multi-indices of different lengths");
  if (!beta.divides(alpha)) throw Error(Errc::index_not_dominating, "beta is not below alpha componentwise");
  if (field.characteristic() == 0) {
    Integer r = 1, b;
    for (unsigned i = 0; i < alpha.nvars(); ++i) {
      mpz_bin_uiui(b.get_mpz_t(), alpha[i], beta[i]);
      r *= b;
    }
    return field.from_integer(r);
  }
  std::uint64_t r = 1;
  for (unsigned i = 0; i < alpha.nvars() && r; ++i) r = r * lucas_binom(alpha[i], beta[i], field.p()) % field.p();
  return field.from_int(static_cast<long long>(r));
}

MvPoly hasse_derivative(const MvPoly& f, const Monomial& gamma) {
  if (gamma.nvars() != f.nvars())
    throw Error(Errc::dimension_mismatch, "multi-index has " + std::to_string(gamma.nvars()) + " entries, polynomial " +
                                              std::to_string(f.nvars()) + " variables");
  if (gamma.is_one()) return f;
  const FieldSpec& F = f.field();
  // alpha -> alpha - gamma preserves graded-lex order, so the output stays sorted.
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!gamma.divides(t.mono)) continue;
    Coeff c = F.mul(multinomial(t.mono, gamma, F), t.coeff);
    if (!F.is_zero(c)) out.push_back({t.mono / gamma, std::move(c)});
  }
  return MvPoly::from_sorted_terms(F, f.nvars(), std::move(out));
}

MvPoly hasse_derivative(const MvPoly& f, unsigned var, unsigned k) {
  return hasse_derivative(f, Monomial::unit(f.nvars(), var, k));
}

bool is_in_E_ps(const MvPoly& f, unsigned s) {
  require_char_p(f);
  std::uint64_t q = ipow(f.field().p(), s);
  for (const auto& t : f.terms()) {
    for (unsigned i = 0; i < f.nvars(); ++i)
      if (t.mono[i] % q) return false;
    if (!f.field().has_pth_root(t.coeff, s)) return false;
  }
  return true;
}

MvPoly poly_pth_root(const MvPoly& f, unsigned s) {
  require_char_p(f);
  if (!is_in_E_ps(f, s))
    throw Error(Errc::not_a_power, "polynomial is not a " + std::to_string(ipow(f.field().p(), s)) + "-th power");
  std::uint32_t q = static_cast<std::uint32_t>(ipow(f.field().p(), s));
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial mono(f.nvars());
    for (unsigned i = 0; i < f.nvars(); ++i) mono.set(i, t.mono[i] / q);
    out.push_back({mono, f.field().pth_root(t.coeff, s)});
  }
  return MvPoly::from_sorted_terms(f.field(), f.nvars(), std::move(out));
}

}  // namespace nabc
