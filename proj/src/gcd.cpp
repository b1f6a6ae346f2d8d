#include "nabc/error.hpp"
#include "nabc/mvpoly.hpp"

namespace nabc {

namespace {

MvPoly gcd_rec(const MvPoly& f, const MvPoly& g);

int main_var(const MvPoly& f, const MvPoly& g) {
  for (int v = static_cast<int>(f.nvars()) - 1; v >= 0; --v)
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) return v;
  return -1;
}

bool involves_only(const MvPoly& f, unsigned var) {
  for (const auto& t : f.terms())
    if (t.mono.total_degree() != t.mono[var]) return false;
  return true;
}

/// Coefficient of z_var^deg as a polynomial free of z_var.
MvPoly lc_in(const MvPoly& f, unsigned var) {
  std::uint32_t d = static_cast<std::uint32_t>(f.degree_in(var));
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono[var] != d) continue;
    Monomial mono = t.mono;
    mono.set(var, 0);
    out.push_back({mono, t.coeff});
  }
  return MvPoly::from_terms(f.field(), f.nvars(), std::move(out));
}

std::vector<MvPoly> coeffs_in(const MvPoly& f, unsigned var) {
  std::vector<std::vector<Term>> buckets(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    Monomial mono = t.mono;
    mono.set(var, 0);
    buckets[t.mono[var]].push_back({mono, t.coeff});
  }
  std::vector<MvPoly> out;
  for (auto& b : buckets)
    if (!b.empty()) out.push_back(MvPoly::from_terms(f.field(), f.nvars(), std::move(b)));
  return out;
}

MvPoly var_pow(const MvPoly& like, unsigned var, unsigned e) {
  return MvPoly::monomial(like.field(), like.nvars(), Monomial::unit(like.nvars(), var, e), like.field().one());
}

/// lc_var(B)^(degA - degB + 1) * A reduced modulo B.
MvPoly prem(const MvPoly& A, const MvPoly& B, unsigned var) {
  int db = B.degree_in(var);
  MvPoly lb = lc_in(B, var);
  MvPoly R = A;
  int steps = A.degree_in(var) - db + 1;
  while (!R.is_zero() && R.degree_in(var) >= db) {
    int dr = R.degree_in(var);
    R = lb * R - lc_in(R, var) * var_pow(R, var, dr - db) * B;
    --steps;
  }
  if (steps > 0) R *= lb.pow(steps);
  return R;
}

MvPoly univariate_gcd(MvPoly A, MvPoly B, unsigned var) {
  const FieldSpec& F = A.field();
  while (!B.is_zero()) {
    int db = B.degree_in(var);
    Coeff inv_lb = F.inv(B.lead().coeff);
    while (!A.is_zero() && A.degree_in(var) >= db) {
      int da = A.degree_in(var);
      A = A - B.mul_monomial(Monomial::unit(A.nvars(), var, da - db)).scale(F.mul(A.lead().coeff, inv_lb));
    }
    std::swap(A, B);
  }
  return A.monic();
}

MvPoly primitive_part(const MvPoly& f, unsigned var) { return exact_div(f, content_in(f, var)); }

/// Primitive gcd of two polynomials that are primitive in z_var.
MvPoly subresultant_gcd(MvPoly A, MvPoly B, unsigned var) {
  if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
  MvPoly g = MvPoly::one(A.field(), A.nvars());
  MvPoly h = g;
  while (true) {
    int delta = A.degree_in(var) - B.degree_in(var);
    MvPoly R = prem(A, B, var);
    if (R.is_zero()) return primitive_part(B, var);
    if (R.degree_in(var) == 0) return MvPoly::one(A.field(), A.nvars());
    A = std::move(B);
    B = exact_div(R, g * h.pow(delta));
    g = lc_in(A, var);
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_div(g.pow(delta), h.pow(delta - 1));
  }
}

MvPoly gcd_rec(const MvPoly& f, const MvPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return MvPoly::one(f.field(), f.nvars());
  int v = main_var(f, g);
  unsigned var = static_cast<unsigned>(v);
  if (f.degree_in(var) == 0) return gcd_rec(f, content_in(g, var));
  if (g.degree_in(var) == 0) return gcd_rec(content_in(f, var), g);
  if (involves_only(f, var) && involves_only(g, var)) return univariate_gcd(f, g, var);
  MvPoly cf = content_in(f, var);
  MvPoly cg = content_in(g, var);
  MvPoly c = gcd_rec(cf, cg);
  MvPoly h = subresultant_gcd(exact_div(f, cf), exact_div(g, cg), var);
  return (c * h).monic();
}

}  // namespace

MvPoly content_in(const MvPoly& f, unsigned var) {
  if (f.is_zero()) return f;
  MvPoly c(f.field(), f.nvars());
  for (const auto& coeff : coeffs_in(f, var)) {
    c = gcd_rec(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

MvPoly gcd(const MvPoly& f, const MvPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
  if (!(f.field() == g.field()) || f.nvars() != g.nvars())
    throw Error(Errc::spec_mismatch, "gcd of polynomials over different rings");
  return gcd_rec(f, g);
}

MvPoly gcd(const std::vector<MvPoly>& fs) {
  if (fs.empty()) throw Error(Errc::both_zero, "gcd of an empty list");
  MvPoly g(fs.front().field(), fs.front().nvars());
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    g = gcd_rec(g, f);
    if (g.is_one()) break;
  }
  if (g.is_zero()) throw Error(Errc::both_zero, "gcd of zero polynomials");
  return g;
}

MvPoly lcm(const MvPoly& f, const MvPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::zero_input, "lcm with a zero argument");
  return (f * exact_div(g, gcd(f, g))).monic();
}

unsigned multiplicity(const MvPoly& f, const MvPoly& P) {
  if (f.is_zero()) throw Error(Errc::zero_poly, "multiplicity in the zero polynomial");
  if (P.is_constant()) throw Error(Errc::constant_divisor, "multiplicity of a constant");
  unsigned e = 0;
  MvPoly r = f;
  while (auto q = try_div(r, P)) {
    r = std::move(*q);
    ++e;
  }
  return e;
}

}  // namespace nabc
