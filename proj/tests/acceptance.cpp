#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nabc/abc.hpp"
#include "nabc/commands.hpp"
#include "nabc/corpus.hpp"
#include "nabc/error.hpp"
#include "nabc/factor_oracle.hpp"
#include "nabc/hasse.hpp"
#include "nabc/instance.hpp"
#include "nabc/nevanlinna.hpp"
#include "nabc/radicals.hpp"
#include "nabc/report.hpp"
#include "nabc/wronskian.hpp"
#include "support.hpp"

using namespace nabc;
using nabc::testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

// ---------------------------------------------------------------- oracles

/// v_p of a nonzero integer by repeated division.
long naive_valuation(Integer a, std::uint32_t p) {
  long v = 0;
  a = abs(a);
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

Rational naive_log_abs(const FieldSpec& F, const Coeff& a) {
  switch (F.kind()) {
    case FieldKind::rational_padic: {
      const Rational& q = a.rational();
      return Rational(naive_valuation(q.get_den(), F.p()) - naive_valuation(q.get_num(), F.p()));
    }
    case FieldKind::prime_field: return 0;
    case FieldKind::ratfunc_tadic: {
      auto lowest = [](const FpPoly& f) {
        long i = 0;
        while (f.coeffs()[static_cast<std::size_t>(i)] == 0) ++i;
        return i;
      };
      const auto& r = a.ratfunc();
      return Rational(lowest(r.den) - lowest(r.num));
    }
  }
  return 0;
}

/// log |f|_{p^rho} straight from the definition; nullopt for f = 0.
std::optional<Rational> naive_log_norm(const MvPoly& f, const Rational& rho) {
  std::optional<Rational> best;
  for (const auto& t : f.terms()) {
    Rational v = naive_log_abs(f.field(), t.coeff) + rho * static_cast<int>(t.mono.total_degree());
    if (!best || v > *best) best = v;
  }
  return best;
}

std::optional<Rational> as_rational(const LogValue& v) {
  if (v.is_neg_infinity()) return std::nullopt;
  return v.value();
}

/// Hasse derivative from exact integer binomials reduced into the field.
MvPoly naive_hasse(const MvPoly& f, const Monomial& g) {
  const FieldSpec& F = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!g.divides(t.mono)) continue;
    Integer b = 1;
    for (unsigned i = 0; i < f.nvars(); ++i) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), t.mono[i], g[i]);
      b *= c;
    }
    out.push_back({t.mono / g, F.mul(F.from_integer(b), t.coeff)});
  }
  return MvPoly::from_terms(F, f.nvars(), std::move(out));
}

Coeff naive_binomial(const Monomial& a, const Monomial& b, const FieldSpec& F) {
  Integer out = 1;
  for (unsigned i = 0; i < a.nvars(); ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), a[i], b[i]);
    out *= c;
  }
  return F.from_integer(out);
}

std::vector<Monomial> dominated_by(const Monomial& a) {
  std::vector<Monomial> out{Monomial(a.nvars())};
  for (unsigned i = 0; i < a.nvars(); ++i) {
    std::vector<Monomial> next;
    for (const auto& b : out)
      for (unsigned e = 0; e <= a[i]; ++e) {
        Monomial c = b;
        c.set(i, e);
        next.push_back(c);
      }
    out = std::move(next);
  }
  return out;
}

/// Determinant by the permutation expansion of the Hasse matrix.
MvPoly leibniz_det(const std::vector<MvPoly>& fs, const std::vector<Monomial>& gammas) {
  const FieldSpec& F = fs[0].field();
  std::size_t n = fs.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MvPoly det(F, fs[0].nvars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    MvPoly term = MvPoly::one(F, fs[0].nvars());
    for (std::size_t i = 0; i < n; ++i) term *= naive_hasse(fs[perm[i]], gammas[i]);
    det = inversions % 2 ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Rank of the coefficient vectors over the base field by plain elimination.
unsigned naive_rank(const std::vector<MvPoly>& fs) {
  if (fs.empty()) return 0;
  const FieldSpec& F = fs[0].field();
  std::vector<Monomial> cols;
  for (const auto& f : fs)
    for (const auto& t : f.terms())
      if (std::find(cols.begin(), cols.end(), t.mono) == cols.end()) cols.push_back(t.mono);
  std::vector<std::vector<Coeff>> M;
  for (const auto& f : fs) {
    std::vector<Coeff> row;
    for (const auto& c : cols) row.push_back(f.coeff_of(c));
    M.push_back(std::move(row));
  }
  unsigned rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < M.size(); ++c) {
    std::size_t piv = rank;
    while (piv < M.size() && F.is_zero(M[piv][c])) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[rank]);
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == rank || F.is_zero(M[r][c])) continue;
      Coeff q = F.div(M[r][c], M[rank][c]);
      for (std::size_t k = c; k < cols.size(); ++k) M[r][k] = F.sub(M[r][k], F.mul(q, M[rank][k]));
    }
    ++rank;
  }
  return rank;
}

/// Factorization of a product we built ourselves, or of a corpus polynomial via trial division.
using Factorization = std::vector<Factor>;

std::optional<Factorization> trial_factor(const MvPoly& f) {
  if (f.is_constant()) return Factorization{};
  try {
    return squarefree_factor_oracle(f);
  } catch (const Error& e) {
    if (e.code() == Errc::degree_too_large) return std::nullopt;
    throw;
  }
}

unsigned deg_of(const MvPoly& f) { return static_cast<unsigned>(std::max(0, f.total_degree())); }

long weighted_degree(const Factorization& fac, const std::function<unsigned(unsigned)>& keep) {
  long out = 0;
  for (const auto& fa : fac) out += static_cast<long>(keep(fa.multiplicity)) * deg_of(fa.poly);
  return out;
}

MvPoly expected_product(const Factorization& fac, const FieldSpec& F, unsigned m,
                        const std::function<unsigned(unsigned)>& keep) {
  MvPoly out = MvPoly::one(F, m);
  for (const auto& fa : fac)
    for (unsigned e = keep(fa.multiplicity); e > 0; --e) out *= fa.poly;
  return out;
}

/// Irreducibles of the whole product with summed multiplicities.
Factorization merged(const std::vector<Factorization>& facs) {
  Factorization out;
  for (const auto& fac : facs)
    for (const auto& fa : fac) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Factor& g) { return g.poly == fa.poly; });
      if (it == out.end())
        out.push_back(fa);
      else
        it->multiplicity += fa.multiplicity;
    }
  return out;
}

bool share_factor(const std::vector<const Factorization*>& facs) {
  if (facs.empty()) return false;
  for (const auto& fa : *facs[0]) {
    bool everywhere = std::all_of(facs.begin() + 1, facs.end(), [&](const Factorization* g) {
      return std::any_of(g->begin(), g->end(), [&](const Factor& h) { return h.poly == fa.poly; });
    });
    if (everywhere) return true;
  }
  return false;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned out = 1;
  while (e--) out *= b;
  return out;
}

// ---------------------------------------------------------------- criteria

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome finish(const Tally& t, double secs, double limit, const std::string& extra = {}) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld cases, %ld failures, %.1f s (limit %.0f s)", t.cases, t.failures, secs, limit);
  std::string detail = buf;
  if (!extra.empty()) detail += ", " + extra;
  if (t.failures) detail += "; first: " + t.first;
  return {t.failures == 0 && secs < limit && t.cases > 0, detail};
}

Outcome hasse_identities() {
  auto t0 = Clock::now();
  Tally t;
  Rng rng(1001);
  for (const auto& F : nabc::testing::all_fields()) {
    for (int i = 0; i < 1000; ++i) {
      unsigned m = static_cast<unsigned>(rng.range(1, 3));
      MvPoly f = rng.poly(F, m, 6), g = rng.poly(F, m, 6);
      Monomial a = rng.mono(m, 4), b = rng.mono(m, 4);
      std::string tag = F.name() + " case " + std::to_string(i);
      MvPoly Da = hasse_derivative(f, a);
      t.expect(Da == naive_hasse(f, a), tag + " binomial formula");
      t.expect(hasse_derivative(f + g, a) == Da + hasse_derivative(g, a), tag + " (i)");
      MvPoly leib(F, m);
      for (const auto& beta : dominated_by(a)) leib += naive_hasse(f, beta) * naive_hasse(g, a / beta);
      t.expect(hasse_derivative(f * g, a) == leib, tag + " (ii)");
      MvPoly lhs = hasse_derivative(hasse_derivative(f, b), a);
      t.expect(lhs == naive_hasse(f, a * b).scale(naive_binomial(a * b, b, F)), tag + " (iii)");
      if (std::uint32_t p = F.characteristic()) {
        unsigned var = static_cast<unsigned>(rng.range(0, m - 1));
        for (unsigned s = 0, q = 1; q * deg_of(f) <= 24; ++s, q *= p) {
          t.expect(hasse_derivative(f.pow(q), var, q) == hasse_derivative(f, var, 1).pow(q), tag + " (iv) s=" + std::to_string(s));
          if (s == 1) break;
        }
      }
    }
  }
  return finish(t, seconds_since(t0), 60);
}

Outcome norm_counting() {
  auto t0 = Clock::now();
  Tally t;
  Rng rng(1002);
  const std::vector<Rational> rhos{Rational(-3), Rational(-1, 2), Rational(0), Rational(2, 3), Rational(5)};
  for (const auto& F : nabc::testing::all_fields())
    for (int i = 0; i < 160; ++i) {
      unsigned m = static_cast<unsigned>(rng.range(1, 3));
      MvPoly f = rng.nonzero_poly(F, m, 5), g = rng.nonzero_poly(F, m, 5);
      MvPoly fg = f * g;
      std::string tag = F.name() + " product " + std::to_string(i);
      for (const auto& rho : rhos) {
        auto direct = naive_log_norm(fg, rho);
        t.expect(direct && *direct == *naive_log_norm(f, rho) + *naive_log_norm(g, rho), tag + " log-additive norm");
        t.expect(as_rational(log_gauss_norm(fg, rho)) == direct, tag + " gauss norm vs definition");
      }
      t.expect(norm_profile(fg) == norm_profile(f) + norm_profile(g), tag + " norm profile");
      auto Cf = counting(f), Cg = counting(g), Cfg = counting(fg);
      t.expect(Cfg.n_at_zero == Cf.n_at_zero + Cg.n_at_zero, tag + " n at 0");
      std::vector<Rational> pts = Cfg.breakpoints;
      pts.insert(pts.end(), Cf.breakpoints.begin(), Cf.breakpoints.end());
      pts.insert(pts.end(), Cg.breakpoints.begin(), Cg.breakpoints.end());
      for (const auto& b : pts) {
        t.expect(Cfg.n_at(b) == Cf.n_at(b) + Cg.n_at(b), tag + " n at breakpoint");
        t.expect(Cfg.N(b) == Cf.N(b) + Cg.N(b), tag + " N at breakpoint");
      }
      try {
        Rational C = poisson_constant(fg);
        t.expect(C == poisson_constant(f) + poisson_constant(g), tag + " poisson additive");
        for (const auto& rho : rhos) t.expect(Cfg.N(rho) == *naive_log_norm(fg, rho) + C, tag + " N = log|f| + C");
      } catch (const Error& e) {
        t.expect(false, tag + " " + e.what());
      }
    }
  return finish(t, seconds_since(t0), 600);
}

Outcome derivative_lemma() {
  auto t0 = Clock::now();
  Tally t;
  Rng rng(1003);
  for (const auto& F : nabc::testing::all_fields())
    for (int i = 0; i < 300; ++i) {
      unsigned m = static_cast<unsigned>(rng.range(1, 3));
      MvPoly f = rng.nonzero_poly(F, m, 6);
      Monomial g = rng.mono(m, 4);
      Rational rho(Integer(static_cast<long>(rng.range(-12, 12))), Integer(static_cast<long>(rng.range(1, 4))));
      MvPoly D = naive_hasse(f, g);
      auto lhs = naive_log_norm(D, rho);
      Rational rhs = *naive_log_norm(f, rho) - rho * static_cast<int>(g.total_degree());
      std::string tag = F.name() + " case " + std::to_string(i) + " rho " + rho.get_str();
      t.expect(!lhs || *lhs <= rhs, tag + " definition");
      t.expect(log_gauss_norm(hasse_derivative(f, g), rho) <= log_gauss_norm(f, rho) + LogValue(-rho * static_cast<int>(g.total_degree())),
               tag + " library");
    }
  return finish(t, seconds_since(t0), 600);
}

/// Every set of at most three distinct catalogue entries with multiplicities in
/// [1, p^2 + 1] and total degree at most 8.
void enumerate_products(const std::vector<MvPoly>& irr, unsigned emax,
                        const std::function<void(const Factorization&)>& visit) {
  Factorization cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t start, unsigned used) {
    if (!cur.empty()) visit(cur);
    if (cur.size() == 3) return;
    for (std::size_t i = start; i < irr.size(); ++i) {
      unsigned d = deg_of(irr[i]);
      for (unsigned e = 1; e <= emax && used + e * d <= 8; ++e) {
        cur.push_back({irr[i], e});
        rec(i + 1, used + e * d);
        cur.pop_back();
      }
    }
  };
  rec(0, 0);
}

/// Monic irreducible count of degree n over F_q from Gauss's formula.
long necklace(long q, unsigned n) {
  auto mu = [](unsigned k) {
    int out = 1;
    for (unsigned d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        k /= d;
        if (k % d == 0) return 0;
        out = -out;
      }
    return k > 1 ? -out : out;
  };
  long s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += mu(d) * static_cast<long>(std::pow(q, n / d));
  return s / n;
}

Outcome radical_oracle() {
  auto t0 = Clock::now();
  Tally t;
  std::string domain;
  struct Domain {
    std::uint32_t p;
    unsigned m;
    unsigned max_irr_degree;
  };
  for (const Domain& dom : {Domain{2, 1, 8}, Domain{3, 1, 8}, Domain{2, 2, 2}, Domain{3, 2, 1}}) {
    FieldSpec F = FieldSpec::prime_field(dom.p);
    const auto& irr = prime_field_irreducibles(F, dom.m, dom.max_irr_degree);
    if (dom.m == 1)
      for (unsigned n = 1; n <= dom.max_irr_degree; ++n) {
        long have = std::count_if(irr.begin(), irr.end(), [&](const MvPoly& P) { return deg_of(P) == n; });
        t.expect(have == necklace(dom.p, n), "catalogue size over F_" + std::to_string(dom.p) + " degree " + std::to_string(n));
      }
    unsigned p = dom.p;
    std::vector<Factorization> products;
    enumerate_products(irr, p * p + 1, [&](const Factorization& fac) { products.push_back(fac); });
    long count = static_cast<long>(products.size());
    auto check_range = [&, p, m = dom.m](std::size_t lo, std::size_t hi) {
      Tally local;
      for (std::size_t i = lo; i < hi; ++i) {
        const Factorization& fac = products[i];
        MvPoly f = expected_product(fac, F, m, [](unsigned e) { return e; });
        std::string tag = "F_" + std::to_string(p) + " " + format_poly(f);
        local.expect(radical(f) == expected_product(fac, F, m, [p](unsigned e) { return e % p ? 1u : 0u; }), tag + " radical");
        MvPoly S = expected_product(fac, F, m, [](unsigned) { return 1u; });
        local.expect(square_free_part(f) == S, tag + " square-free part");
        for (unsigned s = 0, q = p; q / p <= deg_of(f); ++s, q *= p)
          local.expect(higher_radical(f, s) == expected_product(fac, F, m, [q](unsigned e) { return e % q ? 1u : 0u; }),
                       tag + " R_{p^" + std::to_string(s) + "}");
        for (unsigned ell : {1u, 2u, 3u, 5u})
          local.expect(trunc_gcd(f, ell) == expected_product(fac, F, m, [ell](unsigned e) { return std::min(e, ell); }),
                       tag + " trunc " + std::to_string(ell));
      }
      return local;
    };
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<Tally>> parts;
    for (std::size_t w = 0; w < workers; ++w)
      parts.push_back(std::async(std::launch::async, check_range, products.size() * w / workers,
                                 products.size() * (w + 1) / workers));
    for (auto& part : parts) {
      Tally local = part.get();
      t.cases += local.cases;
      if (local.failures && !t.failures) t.first = local.first;
      t.failures += local.failures;
    }
    domain += (domain.empty() ? "" : "; ") + std::string("F_") + std::to_string(p) + " m=" + std::to_string(dom.m) +
              " irreducibles deg<=" + std::to_string(dom.max_irr_degree) + ": " + std::to_string(count) + " products";
  }
  return finish(t, seconds_since(t0), 300, domain);
}

Outcome wronskian_certificates() {
  auto t0 = Clock::now();
  Tally t;
  Rng rng(1005);
  std::string counts;
  for (const auto& F : {FieldSpec::rational_padic(3), FieldSpec::prime_field(2), FieldSpec::prime_field(3)}) {
    std::uint32_t p = F.characteristic();
    int accepted = 0, raised = 0;
    while (accepted < 200) {
      unsigned m = static_cast<unsigned>(rng.range(1, 2));
      std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
      bool powers = p && rng.range(0, 2) == 0;
      std::vector<MvPoly> fs;
      for (std::size_t j = 0; j < n; ++j) {
        MvPoly f = rng.nonzero_poly(F, m, powers ? 2 : 4, 3);
        fs.push_back(powers ? f.pow(p) : f);
      }
      if (naive_rank(fs) != n) continue;
      ++accepted;
      std::string tag = F.name() + " tuple " + std::to_string(accepted);
      unsigned c = 1;
      if (p) {
        auto idx = index_of_independence(fs);
        c = ipow(p, idx.index_s - 1);
        if (idx.index_s > 1) {
          ++raised;
          bool witnessed = idx.witness.has_value();
          t.expect(witnessed, tag + " witness missing");
          if (witnessed) {
            MvPoly s(F, m);
            for (std::size_t j = 0; j < n; ++j) {
              s += (*idx.witness)[j] * fs[j];
              for (const auto& term : (*idx.witness)[j].terms())
                for (unsigned v = 0; v < m; ++v) t.expect(term.mono[v] % c == 0, tag + " witness exponent");
            }
            t.expect(s.is_zero(), tag + " witness relation");
          }
        }
      }
      try {
        auto cert = find_certificate(fs, c);
        t.expect(cert.gammas.size() == n && cert.gammas[0].is_one(), tag + " gamma^0");
        for (std::size_t i = 1; i < cert.gammas.size(); ++i)
          t.expect(cert.gammas[i].total_degree() <= cert.gammas[i - 1].total_degree() + c, tag + " step bound");
        MvPoly det = leibniz_det(fs, cert.gammas);
        t.expect(!det.is_zero(), tag + " nonzero determinant");
        t.expect(det == cert.determinant, tag + " determinant");
      } catch (const Error& e) {
        t.expect(false, tag + " " + e.what());
      }
    }
    counts += (counts.empty() ? "" : ", ") + F.name() + ": " + std::to_string(accepted) + " tuples (" +
              std::to_string(raised) + " with index > 1)";
  }
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned s = 1; s <= 2; ++s) {
      FieldSpec F = FieldSpec::prime_field(p);
      unsigned q = ipow(p, s);
      std::vector<MvPoly> fs{MvPoly::one(F, 1), MvPoly::monomial(F, 1, Monomial::unit(1, 0, q), F.one())};
      std::string tag = "(1, z^" + std::to_string(q) + ") over F_" + std::to_string(p);
      unsigned index = index_of_independence(fs).index_s;
      t.expect(index == s + 1, tag + " index");
      unsigned need = ipow(p, index - 1);
      auto works = [&](unsigned c) {
        try {
          return check_certificate(find_certificate(fs, c));
        } catch (const Error&) {
          return false;
        }
      };
      t.expect(!works(1) && !works(need - 1), tag + " succeeded below step p^(s-1)");
      t.expect(works(need), tag + " failed at step p^(s-1)");
    }
  return finish(t, seconds_since(t0), 600, counts);
}

Outcome basic_corpus() {
  auto t0 = Clock::now();
  Tally t;
  std::ifstream in(std::string(NABC_SOURCE_DIR) + "/data/basic_corpus.jsonl");
  std::string line;
  int char0 = 0, charp = 0, violations = 0, slack0 = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Instance inst = instance_from_json(Json::parse(line));
    (inst.field.characteristic() ? charp : char0)++;
    const MvPoly& f0 = inst.polys.at(0);
    const MvPoly& f1 = inst.polys.at(1);
    AbcReport r = verify_basic_abc(f0, f1);
    if (inst.params.value("expect_violation", false)) {
      ++violations;
      t.expect(r.verdict == Verdict::hypothesis_violated && exit_code(r.verdict) == 2, inst.id + " expected exit 2");
      continue;
    }
    MvPoly f2 = f0 + f1;
    unsigned top = std::max({deg_of(f0), deg_of(f1), deg_of(f2)});
    long rdeg = inst.params.at("expected_radical_degree").get<long>();
    const InequalityCheck* c = r.find_check("basic");
    t.expect(c && c->lhs == top && c->rhs == rdeg - 1, inst.id + " degree sides");
    t.expect(top <= rdeg - 1, inst.id + " basic inequality");
    t.expect(r.verdict == Verdict::holds && exit_code(r.verdict) == 0, inst.id + " verdict");
    if (top == rdeg - 1) ++slack0;
    t.expect(r.margins && r.margins->eventually_non_increasing, inst.id + " margins");
    // excess sampled beyond every breakpoint, recomputed from the definition
    std::optional<Rational> prev;
    MvPoly R = radical(f0 * f1 * f2);
    for (int rho : {64, 128, 256, 512}) {
      Rational x = std::max({*naive_log_norm(f0, rho), *naive_log_norm(f1, rho), *naive_log_norm(f2, rho)}) -
                   *naive_log_norm(R, rho) + rho;
      t.expect(!prev || x <= *prev, inst.id + " excess increases at rho " + std::to_string(rho));
      prev = x;
    }
  }
  CommandOptions o;
  o.instance_path = std::string(NABC_SOURCE_DIR) + "/instances/basic_fermat.json";
  t.expect(run_command("verify-basic", o).exit_code == 2, "CLI exit code for Fermat instance");
  o.instance_path = std::string(NABC_SOURCE_DIR) + "/instances/basic_slack0.json";
  t.expect(run_command("verify-basic", o).output.find("slack 0") != std::string::npos, "CLI slack 0");
  t.expect(char0 == 50 && charp == 30, "corpus composition");
  return finish(t, seconds_since(t0), 600,
                std::to_string(char0) + " char-0, " + std::to_string(charp) + " char-p, " + std::to_string(violations) +
                    " hypothesis violations, " + std::to_string(slack0) + " with slack 0");
}

// ---------------------------------------------------------------- generalized ABC

struct CorpusCase {
  Instance inst;
  bool kwise = false;
  std::vector<Factorization> facs;
  bool factored = true;
};

std::vector<CorpusCase> abc_instances() {
  struct Group {
    CharMode chars;
    std::uint32_t p;
    Coprimality mode;
    bool vanishing;
    std::size_t per_n;
    unsigned n_lo, n_hi;
  };
  const std::vector<Group> groups{
      {CharMode::zero, 3, Coprimality::pairwise, false, 10, 2, 6},
      {CharMode::zero, 3, Coprimality::pairwise, true, 10, 2, 6},
      {CharMode::positive, 3, Coprimality::pairwise, false, 7, 2, 6},
      {CharMode::positive, 2, Coprimality::pairwise, true, 7, 2, 6},
      {CharMode::zero, 3, Coprimality::kwise, true, 10, 3, 5},
  };
  std::vector<CorpusCase> out;
  std::uint64_t seed = 700;
  for (const auto& g : groups)
    for (unsigned n = g.n_lo; n <= g.n_hi; ++n) {
      CorpusSpec spec;
      spec.seed = seed++;
      spec.count = g.per_n;
      spec.chars = g.chars;
      spec.p = g.p;
      spec.m = 2;
      spec.n = n;
      spec.degree = 6;
      spec.mode = g.mode;
      spec.vanishing_subsums = g.vanishing;
      for (auto& inst : generate_corpus(spec)) out.push_back({std::move(inst), g.mode == Coprimality::kwise, {}, true});
    }
  return out;
}

/// Factorizations of the characteristic-0 instances, computed offline with sympy.
std::map<std::string, Json> stored_factors() {
  std::map<std::string, Json> out;
  std::ifstream in(std::string(NABC_SOURCE_DIR) + "/data/abc_corpus_factors.jsonl");
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) {
      Json doc = Json::parse(line);
      std::string id = doc.at("id").get<std::string>();
      out[id] = std::move(doc);
    }
  return out;
}

/// Builds the factor lists from the stored record; false when the record does
/// not describe this instance or its factors do not multiply back to f_j.
bool load_factors(CorpusCase& c, const Json& record) {
  Json inst = instance_to_json(c.inst);
  if (record.at("polys") != inst.at("polys")) return false;
  for (std::size_t j = 0; j < c.inst.polys.size(); ++j) {
    const MvPoly& f = c.inst.polys[j];
    Factorization fac;
    MvPoly prod = MvPoly::one(c.inst.field, f.nvars());
    for (const auto& entry : record.at("factors").at(j)) {
      Json doc = {{"id", "factor"}, {"field", inst.at("field")}, {"vars", inst.at("vars")}, {"polys", Json::array({entry.at(0)})}};
      MvPoly P = instance_from_json(doc).polys.at(0).monic();
      unsigned e = entry.at(1).get<unsigned>();
      prod *= P.pow(e);
      fac.push_back({P, e});
    }
    if (prod != f.monic()) return false;
    c.facs.push_back(std::move(fac));
  }
  return true;
}

std::vector<CorpusCase> abc_corpus(int& stale) {
  std::vector<CorpusCase> out = abc_instances();
  auto stored = stored_factors();
  for (auto& c : out) {
    auto it = stored.find(c.inst.id);
    if (c.inst.field.characteristic() == 0) {
      c.factored = it != stored.end() && load_factors(c, it->second);
      if (!c.factored) {
        ++stale;
        c.facs.clear();
      }
      continue;
    }
    for (const auto& f : c.inst.polys) {
      auto fac = trial_factor(f);
      if (!fac) {
        c.factored = false;
        c.facs.clear();
        break;
      }
      c.facs.push_back(std::move(*fac));
    }
  }
  return out;
}

/// Every nonempty vanishing subset as a bitmask, by brute force.
std::vector<unsigned> naive_vanishing(const std::vector<MvPoly>& fs) {
  std::vector<unsigned> out;
  for (unsigned mask = 1; mask < (1u << fs.size()); ++mask) {
    MvPoly s(fs[0].field(), fs[0].nvars());
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (mask >> i & 1) s += fs[i];
    if (s.is_zero()) out.push_back(mask);
  }
  return out;
}

unsigned to_mask(const IndexSet& I) {
  unsigned m = 0;
  for (auto i : I) m |= 1u << i;
  return m;
}

bool mask_shares_factor(const CorpusCase& c, unsigned mask) {
  std::vector<const Factorization*> sel;
  for (std::size_t i = 0; i < c.facs.size(); ++i)
    if (mask >> i & 1) sel.push_back(&c.facs[i]);
  if (sel.size() == 1) return !c.inst.polys[static_cast<std::size_t>(std::countr_zero(mask))].is_constant();
  return share_factor(sel);
}

bool every_k_subset_coprime(const CorpusCase& c, unsigned k) {
  std::size_t N = c.inst.polys.size();
  for (unsigned mask = 1; mask < (1u << N); ++mask)
    if (static_cast<unsigned>(std::popcount(mask)) == std::min<unsigned>(k, static_cast<unsigned>(N)) && mask_shares_factor(c, mask))
      return false;
  return true;
}

Rational sum_d_minus_i(unsigned d, unsigned k_bar) {
  Rational s = 0;
  for (unsigned i = 1; i < k_bar; ++i) s += static_cast<int>(d) - static_cast<int>(i);
  return s;
}

void check_chain(Tally& t, const AbcConstants& K, std::uint32_t p, const std::string& tag) {
  t.expect(K.b >= K.a_bar && K.a_bar >= K.a && K.a >= 1, tag + " b >= a_bar >= a >= 1");
  t.expect(K.a <= K.c * (K.d - 1), tag + " a <= c(d-1)");
  t.expect(Rational(K.a_bar) <= sum_d_minus_i(K.d, K.k_bar) * K.c || K.k_bar == 2, tag + " a_bar <= c sum(d-i)");
  t.expect(ipow(p ? p : 1, K.sigma) <= K.a, tag + " p^sigma <= a");
}

Outcome generalized_abc(const std::vector<CorpusCase>& corpus, double build_secs) {
  auto t0 = Clock::now();
  Tally t;
  int with_subsums = 0, charp = 0, gate_fired = 0, factored = 0;
  for (const auto& c : corpus) {
    const auto& fs = c.inst.polys;
    const FieldSpec& F = c.inst.field;
    std::uint32_t p = F.characteristic();
    unsigned m = fs[0].nvars();
    std::size_t N = fs.size();
    unsigned n = static_cast<unsigned>(N) - 1;
    const std::string& id = c.inst.id;
    if (p) ++charp;
    if (c.factored) ++factored;

    auto masks = naive_vanishing(fs);
    std::vector<unsigned> lib;
    for (const auto& I : vanishing_subsets(fs)) lib.push_back(to_mask(I));
    std::sort(lib.begin(), lib.end());
    std::sort(masks.begin(), masks.end());
    t.expect(lib == masks, id + " vanishing subsets");
    bool proper = std::any_of(masks.begin(), masks.end(), [&](unsigned mk) { return mk != (1u << N) - 1; });
    if (proper) ++with_subsums;
    unsigned d = naive_rank(fs);
    bool subsum_ok = true;
    if (c.factored)
      for (unsigned mk : masks)
        if (mask_shares_factor(c, mk)) subsum_ok = false;

    AbcReport first = verify_abc_first(fs);
    if (c.factored) t.expect(first.hypothesis_holds("subsum_gcd") == subsum_ok, id + " subsum gate (first)");
    if (first.verdict != Verdict::hypothesis_violated) {
      t.expect(first.verdict == Verdict::holds, id + " first version verdict");
      const AbcConstants& K = *first.constants;
      check_chain(t, K, p, id + " first");
      t.expect(K.d == d, id + " d");
      if (c.factored) {
        long tsum = 0, gsum = 0;
        for (const auto& fac : c.facs) {
          tsum += weighted_degree(fac, [&](unsigned e) { return std::min(e, K.a); });
          unsigned q = ipow(p ? p : 1, K.sigma + 1);
          gsum += weighted_degree(fac, [&](unsigned e) { return p && e % q == 0 ? 0u : std::min(e, K.a); });
        }
        auto* s = first.find_check("abctrsum");
        t.expect(s && s->holds && s->rhs == tsum - K.b, id + " abctrsum");
        if (p) {
          auto* sp = first.find_check("abctrsumcharp");
          t.expect(sp && sp->holds && sp->rhs == gsum - K.b, id + " abctrsumcharp");
        }
      }
      for (std::size_t bi = 0; bi < K.blocks.size(); ++bi) {
        MvPoly FB = MvPoly::one(F, m), rhs = K.delta0[bi];
        unsigned aB = K.block_constants[bi][0], sB = K.block_constants[bi][3];
        for (auto j : K.blocks[bi]) {
          FB *= fs[j];
          rhs *= p ? sigma_radical_gcd(fs[j], aB, sB) : trunc_gcd(fs[j], aB);
        }
        try {
          exact_div(rhs, FB);
          t.expect(true, "");
        } catch (const Error& e) {
          t.expect(false, id + " ledger block " + std::to_string(bi) + ": " + e.what());
        }
      }
      for (const auto& bc : K.certificates) {
        t.expect(check_certificate(bc.cert), id + " certificate");
        t.expect(leibniz_det(bc.cert.functions, bc.cert.gammas) == bc.cert.determinant, id + " certificate determinant");
      }
    }

    for (unsigned k = 2; k <= std::min(3u, n); ++k) {
      VerifyOptions o;
      o.k = k;
      AbcReport r = verify_abc_second(fs, o);
      std::string tag = id + " k=" + std::to_string(k);
      unsigned k_bar = std::min(k, d);
      bool no_sub_ok = !proper || k_bar == 2;
      t.expect(r.hypothesis_holds("no_vanishing_subsum") == no_sub_ok, tag + " vanishing gate");
      bool main_ok = no_sub_ok;
      if (c.factored) {
        bool kgcd = every_k_subset_coprime(c, k);
        t.expect(r.hypothesis_holds("k_subset_gcd") == kgcd, tag + " k-subset gate");
        t.expect(r.hypothesis_holds("subsum_gcd") == subsum_ok, tag + " subsum gate");
        main_ok = main_ok && kgcd && subsum_ok;
        t.expect((r.verdict == Verdict::hypothesis_violated) == !main_ok, tag + " gate verdict");
      }
      if (r.verdict == Verdict::hypothesis_violated) {
        ++gate_fired;
        continue;
      }
      t.expect(r.verdict == Verdict::holds, tag + " second version verdict");
      const AbcConstants& K = *r.constants;
      check_chain(t, K, p, tag);
      if (c.factored) {
        Factorization all = merged(c.facs);
        long T = weighted_degree(all, [&](unsigned e) { return std::min(e, K.a_bar); });
        auto* pr = r.find_check("abctrprod");
        t.expect(pr && pr->holds && pr->rhs == T - K.b, tag + " abctrprod");
      }
    }
  }
  double secs = seconds_since(t0) + build_secs;
  return finish(t, secs, 600,
                std::to_string(corpus.size()) + " instances (" + std::to_string(charp) + " char p, " +
                    std::to_string(with_subsums) + " with vanishing subsums, " + std::to_string(factored) +
                    " fully factored, " + std::to_string(gate_fired) + " gated runs)");
}

Outcome corollaries(const std::vector<CorpusCase>& corpus) {
  auto t0 = Clock::now();
  Tally t;
  int runs = 0, bb = 0, sf_vanishing = 0, five = 0;
  for (const auto& c : corpus) {
    const auto& fs = c.inst.polys;
    if (c.inst.field.characteristic() != 0 || !c.factored) continue;
    const std::string& id = c.inst.id;
    AbcReport r = verify_corollaries(fs);
    if (r.verdict == Verdict::hypothesis_violated) continue;
    ++runs;
    t.expect(r.verdict == Verdict::holds, id + " verdict");
    const AbcConstants& K = *r.constants;
    unsigned top = 0, C = 0;
    long ra = 0, rsum = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      top = std::max(top, deg_of(fs[j]));
      if (fs[j].is_constant()) ++C;
      ra += weighted_degree(c.facs[j], [&](unsigned e) { return std::min(e, K.a); });
      rsum += weighted_degree(c.facs[j], [](unsigned) { return 1u; });
    }
    unsigned n = static_cast<unsigned>(fs.size()) - 1;
    auto* four = r.find_check("deBondtFour");
    long rhs4 = ra - static_cast<long>(K.a * (K.a + 1) / 2);
    t.expect(four && four->holds && four->rhs == rhs4 && top <= rhs4, id + " deBondtFour");
    for (unsigned A = K.d; A + C <= n; ++A) {
      ++five;
      auto* ch = r.find_check("deBondtFive[A=" + std::to_string(A) + "]");
      long rhs5 = static_cast<long>(A) * rsum - static_cast<long>(A * (A + 1) / 2);
      t.expect(ch && ch->holds && ch->rhs == rhs5 && top <= rhs5, id + " deBondtFive A=" + std::to_string(A));
    }
    auto* sf = r.find_check("abcsf");
    t.expect(sf && (!sf->evaluated || sf->holds), id + " abcsf");
    if (sf && sf->evaluated && K.blocks.size() > 1) ++sf_vanishing;
    auto* b = r.find_check("BB");
    bool triples = every_k_subset_coprime(c, 3);
    if (c.kwise && fs.size() >= 4 && triples) {
      long R = weighted_degree(merged(c.facs), [](unsigned) { return 1u; });
      long rhs = (2 * static_cast<long>(n) - 3) * (R - 1);
      t.expect(b && b->evaluated && b->holds && b->rhs == rhs && top <= rhs, id + " BB");
      ++bb;
    }
  }
  t.expect(bb > 0, "no k = 3 instance reached BB");
  t.expect(sf_vanishing > 0, "abcsf never took the vanishing-subsum path");
  return finish(t, seconds_since(t0), 600,
                std::to_string(runs) + " char-0 instances, " + std::to_string(five) + " deBondtFive ranks, " +
                    std::to_string(bb) + " BB checks, " + std::to_string(sf_vanishing) + " abcsf on split instances");
}

Outcome kbar_two(const std::vector<CorpusCase>& corpus) {
  auto t0 = Clock::now();
  Tally t;
  int used = 0;
  for (const auto& c : corpus) {
    const auto& fs = c.inst.polys;
    if (c.kwise || !c.factored) continue;
    if (!every_k_subset_coprime(c, 2)) continue;
    const std::string& id = c.inst.id;
    AbcReport first = verify_abc_first(fs), second = verify_abc_second(fs);
    if (second.verdict == Verdict::hypothesis_violated) continue;
    ++used;
    t.expect(second.verdict == first.verdict, id + " verdict");
    const AbcConstants& K1 = *first.constants;
    const AbcConstants& K2 = *second.constants;
    t.expect(K2.k_bar == 2 && K2.a_bar == K1.a && K2.b == K1.b, id + " a_bar and b");
    long tsum = 0;
    for (const auto& fac : c.facs) tsum += weighted_degree(fac, [&](unsigned e) { return std::min(e, K1.a); });
    auto* prod = second.find_check("abctrprod");
    auto* sum = first.find_check("abctrsum");
    t.expect(prod && sum && prod->rhs == tsum - K1.b && sum->rhs == prod->rhs && prod->lhs == sum->lhs, id + " N^(l) additivity");
    if (c.inst.field.characteristic() == 0)
      t.expect(first.margins->excess == second.margins->excess, id + " margin profiles");
  }
  t.expect(used >= 50, "too few pairwise coprime instances");
  return finish(t, seconds_since(t0), 600, std::to_string(used) + " pairwise coprime instances");
}

Outcome cli_determinism() {
  auto t0 = Clock::now();
  Tally t;
  CommandOptions o;
  o.seed = 7;
  o.machine = true;
  auto a = run_command("corpus-run", o), b = run_command("corpus-run", o);
  t.expect(!a.output.empty(), "empty output");
  t.expect(a.output == b.output, "machine reports differ");
  t.expect(a.exit_code == 0 && b.exit_code == 0, "corpus-run exit code " + std::to_string(a.exit_code));
  return finish(t, seconds_since(t0), 600, std::to_string(a.output.size()) + " bytes");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--dump-corpus") {
    std::ofstream out(argv[2]);
    for (const auto& c : abc_instances())
      if (c.inst.field.characteristic() == 0) out << instance_to_json(c.inst).dump() << "\n";
    return 0;
  }
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  int failed = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  };
  auto guarded = [](const std::function<Outcome()>& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      return Outcome{false, std::string("exception: ") + e.what()};
    }
  };
  if (wanted(1)) report(1, "hasse identities", guarded(hasse_identities));
  if (wanted(2)) report(2, "norm and counting additivity", guarded(norm_counting));
  if (wanted(3)) report(3, "logarithmic derivative lemma", guarded(derivative_lemma));
  if (wanted(4)) report(4, "radical oracle equivalence", guarded(radical_oracle));
  if (wanted(5)) report(5, "wronskian certificates", guarded(wronskian_certificates));
  if (wanted(6)) report(6, "basic abc corpus", guarded(basic_corpus));
  auto t0 = Clock::now();
  std::vector<CorpusCase> corpus;
  std::string corpus_error;
  int stale = 0;
  try {
    if (wanted(7) || wanted(8) || wanted(9)) corpus = abc_corpus(stale);
    if (stale) corpus_error = std::to_string(stale) + " instances lack matching stored factorizations";
  } catch (const std::exception& e) {
    corpus_error = e.what();
  }
  double build = seconds_since(t0);
  auto with_corpus = [&](const std::function<Outcome()>& fn) {
    if (!corpus_error.empty()) return Outcome{false, "corpus generation: " + corpus_error};
    return guarded(fn);
  };
  if (wanted(7)) report(7, "generalized abc corpus", with_corpus([&] { return generalized_abc(corpus, build); }));
  if (wanted(8)) report(8, "corollaries", with_corpus([&] { return corollaries(corpus); }));
  if (wanted(9)) report(9, "k_bar = 2 consistency", with_corpus([&] { return kbar_two(corpus); }));
  if (wanted(10)) report(10, "cli determinism", guarded(cli_determinism));
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
