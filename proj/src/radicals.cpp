#include "nabc/radicals.hpp"

#include "nabc/error.hpp"
#include "nabc/hasse.hpp"

namespace nabc {

namespace {

void require_nonzero(const MvPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_poly, "radical of the zero polynomial");
}

void require_char_p(const MvPoly& f) {
  if (f.field().characteristic() == 0)
    throw Error(Errc::wrong_characteristic, "higher radicals need characteristic p");
}

/// One step of the chain: R_{p^s}(f) from R_{p^(s-1)}(f).
MvPoly next_radical(const MvPoly& f, const MvPoly& prev, unsigned s) {
  const FieldSpec& F = f.field();
  unsigned m = f.nvars();
  unsigned q = static_cast<unsigned>(ipow(F.p(), s));
  MvPoly fbar = exact_div(f, layered_gcd(f, prev, q));
  MvPoly H = MvPoly::one(F, m);
  for (unsigned i = 0; i < m; ++i) {
    MvPoly h = exact_div(fbar, gcd(fbar, hasse_derivative(fbar, i, q)));
    if (!h.is_constant()) H = lcm(H, h);
  }
  MvPoly G = H;
  if (!H.is_constant()) G = exact_div(H, layered_gcd(H, higher_radical(H, s - 1), q - 1));
  MvPoly root = poly_pth_root(G.monic(), s);
  return lcm(prev, root);
}

}  // namespace

MvPoly radical(const MvPoly& f) {
  require_nonzero(f);
  MvPoly R = MvPoly::one(f.field(), f.nvars());
  if (f.is_constant()) return R;
  for (unsigned j = 0; j < f.nvars(); ++j) {
    MvPoly h = exact_div(f, gcd(f, partial(f, j)));
    if (!h.is_constant()) R = lcm(R, h);
  }
  return R;
}

MvPoly higher_radical(const MvPoly& f, unsigned s) {
  require_nonzero(f);
  require_char_p(f);
  MvPoly R = radical(f);
  for (unsigned t = 1; t <= s; ++t) R = next_radical(f, R, t);
  return R;
}

unsigned sqfree_level(const MvPoly& f) {
  std::uint32_t p = f.field().characteristic();
  if (p == 0) return 0;
  unsigned s = 0;
  std::uint64_t deg = static_cast<std::uint64_t>(std::max(f.total_degree(), 0));
  while (ipow(p, s + 1) <= deg) ++s;
  return s;
}

RadicalChain radical_chain(const MvPoly& f) {
  require_nonzero(f);
  require_char_p(f);
  RadicalChain chain{f, {radical(f)}, sqfree_level(f)};
  for (unsigned t = 1; t <= chain.terminal_s; ++t) chain.entries.push_back(next_radical(f, chain.entries.back(), t));
  return chain;
}

MvPoly square_free_part(const MvPoly& f) {
  require_nonzero(f);
  if (f.field().characteristic() == 0 || f.is_constant()) return radical(f);
  return higher_radical(f, sqfree_level(f));
}

MvPoly layered_gcd(const MvPoly& f, const MvPoly& R, unsigned e) {
  require_nonzero(f);
  MvPoly result = MvPoly::one(f.field(), f.nvars());
  MvPoly rest = f;
  unsigned cap = std::min<unsigned>(e, static_cast<unsigned>(std::max(f.total_degree(), 0)));
  for (unsigned i = 0; i < cap; ++i) {
    MvPoly g = gcd(rest, R);
    if (g.is_constant()) break;
    result *= g;
    rest = exact_div(rest, g);
  }
  return result.monic();
}

MvPoly trunc_gcd(const MvPoly& f, unsigned ell) { return layered_gcd(f, square_free_part(f), ell); }

MvPoly sigma_radical_gcd(const MvPoly& f, unsigned a, unsigned sigma) {
  require_nonzero(f);
  require_char_p(f);
  return layered_gcd(f, higher_radical(f, sigma), a);
}

}  // namespace nabc
