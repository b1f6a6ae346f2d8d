#include "nabc/abc.hpp"

#include <algorithm>
#include <numeric>

#include "nabc/error.hpp"
#include "nabc/hasse.hpp"
#include "nabc/linalg.hpp"
#include "nabc/nevanlinna.hpp"
#include "nabc/poly_text.hpp"
#include "nabc/radicals.hpp"

namespace nabc {

namespace {

constexpr std::size_t kMaxFunctions = 13;

void guard_size(const std::vector<MvPoly>& fs) {
  if (fs.size() > kMaxFunctions)
    throw Error(Errc::guard_exceeded, std::to_string(fs.size()) + " functions exceed the subset-search cap of " +
                                          std::to_string(kMaxFunctions));
}

std::vector<MvPoly> select(const std::vector<MvPoly>& fs, const IndexSet& I) {
  std::vector<MvPoly> out;
  out.reserve(I.size());
  for (auto i : I) out.push_back(fs[i]);
  return out;
}

/// Size-s subsets of pool in lexicographic order of positions.
std::vector<IndexSet> combinations(const IndexSet& pool, std::size_t s) {
  std::vector<IndexSet> out;
  if (s > pool.size()) return out;
  std::vector<std::size_t> pos(s);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    IndexSet I;
    for (auto q : pos) I.push_back(pool[q]);
    out.push_back(std::move(I));
    std::size_t i = s;
    while (i > 0 && pos[i - 1] == pool.size() - s + i - 1) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < s; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

IndexSet iota_set(std::size_t n) {
  IndexSet out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

bool sums_to_zero(const std::vector<MvPoly>& fs, const IndexSet& I) {
  MvPoly s(fs.front().field(), fs.front().nvars());
  for (auto i : I) s += fs[i];
  return s.is_zero();
}

unsigned rank_of(const std::vector<MvPoly>& fs, const IndexSet& I) {
  return coeff_rank(select(fs, I));
}

std::string format_set(const IndexSet& I) {
  std::string out = "{";
  for (std::size_t i = 0; i < I.size(); ++i) out += (i ? "," : "") + std::to_string(I[i]);
  return out + "}";
}

unsigned deg(const MvPoly& f) { return static_cast<unsigned>(std::max(0, f.total_degree())); }

unsigned max_degree(const std::vector<MvPoly>& fs) {
  unsigned out = 0;
  for (const auto& f : fs) out = std::max(out, deg(f));
  return out;
}

unsigned pow_p(std::uint32_t p, unsigned e) { return static_cast<unsigned>(ipow(p, e)); }

struct BlockData {
  BmPartition partition;
  std::vector<BlockCertificate> certificates;
  std::vector<Monomial> gammas;
  MvPoly delta0;
  unsigned a = 0, b = 0, a_bar = 0, sigma = 0;
};

bool grlex_less(const Monomial& x, const Monomial& y) { return (x <=> y) < 0; }

IndexSet map_set(const IndexSet& local, const IndexSet& global) {
  IndexSet out;
  for (auto i : local) out.push_back(global[i]);
  return out;
}

/// Constants of one vanishing block B (global indices), with k_bar = min(k, d_B).
BlockData block_constants(const std::vector<MvPoly>& fs, const IndexSet& B, unsigned k) {
  auto sub = select(fs, B);
  const FieldSpec& F = sub.front().field();
  unsigned m = sub.front().nvars();
  std::uint32_t p = F.characteristic();
  unsigned d = coeff_rank(sub);
  if (d < 2) throw Error(Errc::validation_error, "functions of block " + format_set(B) + " span a line");
  unsigned c = p ? pow_p(p, collection_index(sub) - 1) : 1;

  BlockData out;
  BmPartition local = bm_partition(sub);
  for (const auto& I : local.I_sets) out.partition.I_sets.push_back(map_set(I, B));
  for (const auto& J : local.J_sets) out.partition.J_sets.push_back(map_set(J, B));

  out.delta0 = MvPoly::one(F, m);
  for (std::size_t l = 0; l < local.u(); ++l) {
    IndexSet W = local.I_sets[l];
    if (l == 0) W.erase(W.begin());
    BlockCertificate bc;
    bc.block = l;
    bc.indices = map_set(W, B);
    bc.cert = find_certificate(select(sub, W), c);
    out.delta0 *= bc.cert.determinant;
    out.gammas.insert(out.gammas.end(), bc.cert.gammas.begin() + 1, bc.cert.gammas.end());
    out.certificates.push_back(std::move(bc));
  }
  std::sort(out.gammas.begin(), out.gammas.end(), [](const Monomial& x, const Monomial& y) {
    if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
    return grlex_less(x, y);
  });
  unsigned max_component = 0;
  for (const auto& g : out.gammas) {
    out.b += g.total_degree();
    max_component = std::max(max_component, g.max_component());
  }
  if (!out.gammas.empty()) out.a = out.gammas.back().total_degree();
  unsigned k_bar = std::min(k, d);
  for (std::size_t i = 1; i + 1 <= k_bar && i <= out.gammas.size(); ++i)
    out.a_bar += out.gammas[out.gammas.size() - i].total_degree();
  if (p)
    while (static_cast<std::uint64_t>(ipow(p, out.sigma + 1)) <= max_component) ++out.sigma;
  return out;
}

/// Combines the blocks: a and sigma by max, b by sum, a_bar by max.
AbcConstants assemble(const std::vector<MvPoly>& fs, const std::vector<IndexSet>& blocks, unsigned k) {
  AbcConstants K;
  std::uint32_t p = fs.front().field().characteristic();
  K.d = coeff_rank(fs);
  K.c = p ? pow_p(p, collection_index(fs) - 1) : 1;
  K.k = k;
  K.k_bar = std::min(k, K.d);
  for (const auto& B : blocks) {
    BlockData D = block_constants(fs, B, k);
    K.a = std::max(K.a, D.a);
    K.b += D.b;
    K.a_bar = std::max(K.a_bar, D.a_bar);
    K.sigma = std::max(K.sigma, D.sigma);
    K.gammas_used.insert(K.gammas_used.end(), D.gammas.begin(), D.gammas.end());
    K.certificates.insert(K.certificates.end(), D.certificates.begin(), D.certificates.end());
    K.blocks.push_back(B);
    K.partitions.push_back(std::move(D.partition));
    K.delta0.push_back(std::move(D.delta0));
    K.block_constants.push_back({D.a, D.b, D.a_bar, D.sigma});
  }
  std::stable_sort(K.gammas_used.begin(), K.gammas_used.end(),
                   [](const Monomial& x, const Monomial& y) { return x.total_degree() < y.total_degree(); });
  auto violations = constant_chain_violations(K, p);
  if (!violations.empty()) {
    std::string all;
    for (const auto& v : violations) all += (all.empty() ? "" : "; ") + v;
    throw Error(Errc::invariant_violated, all);
  }
  return K;
}

void validate_collection(const std::vector<MvPoly>& fs) {
  if (fs.empty()) throw Error(Errc::validation_error, "empty collection");
  guard_size(fs);
  for (const auto& f : fs)
    if (f.is_zero()) throw Error(Errc::zero_poly, "a function of the collection is zero");
  if (std::all_of(fs.begin(), fs.end(), [](const MvPoly& f) { return f.is_constant(); }))
    throw Error(Errc::validation_error, "all functions are constant");
}

MarginProfile make_margins(PiecewiseLinear excess, const std::vector<Rational>& requested) {
  MarginProfile out;
  auto rhos = requested.empty() ? default_rho_samples() : requested;
  std::sort(rhos.begin(), rhos.end());
  rhos.erase(std::unique(rhos.begin(), rhos.end()), rhos.end());
  for (const auto& r : rhos) out.samples.emplace_back(r, excess(r));
  out.eventually_non_increasing = excess.final_slope() <= 0;
  const auto& br = excess.breakpoints();
  std::optional<Rational> prev;
  for (const auto& [r, v] : out.samples) {
    if (!br.empty() && r < br.back()) continue;
    if (prev && v > *prev) out.eventually_non_increasing = false;
    prev = v;
  }
  out.excess = std::move(excess);
  return out;
}

PiecewiseLinear max_profile(const std::vector<MvPoly>& fs) {
  PiecewiseLinear out = norm_profile(fs.front());
  for (std::size_t i = 1; i < fs.size(); ++i) out = max(out, norm_profile(fs[i]));
  return out;
}

PiecewiseLinear linear(const Rational& slope) { return PiecewiseLinear(Line{slope, 0}); }

InequalityCheck degree_check(std::string name, unsigned lhs, Integer rhs, std::string detail = {}) {
  InequalityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = std::move(rhs);
  c.holds = c.lhs <= c.rhs;
  c.detail = std::move(detail);
  return c;
}

InequalityCheck skipped(std::string name, std::string why) {
  InequalityCheck c;
  c.name = std::move(name);
  c.evaluated = false;
  c.holds = true;
  c.detail = std::move(why);
  return c;
}

/// Hypotheses shared by the generalized theorems.
std::vector<HypothesisCheck> collection_hypotheses(const std::vector<MvPoly>& fs) {
  std::vector<HypothesisCheck> out;
  out.push_back({"n_at_least_2", fs.size() >= 3, fs.size() >= 3 ? "" : "n = " + std::to_string(fs.size() - 1)});
  HypothesisCheck none_zero{"none_zero", true, {}};
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].is_zero()) {
      none_zero = {"none_zero", false, "f_" + std::to_string(i) + " = 0"};
      break;
    }
  out.push_back(none_zero);
  bool all_constant = std::all_of(fs.begin(), fs.end(), [](const MvPoly& f) { return f.is_constant(); });
  out.push_back({"not_all_constant", !all_constant, all_constant ? "every f_j is constant" : ""});
  bool zero_sum = fs.empty() ? false : sums_to_zero(fs, iota_set(fs.size()));
  out.push_back({"sum_zero", zero_sum, zero_sum ? "" : "sum of the f_j is nonzero"});
  return out;
}

bool all_hold(const std::vector<HypothesisCheck>& hs) {
  return std::all_of(hs.begin(), hs.end(), [](const HypothesisCheck& h) { return h.holds; });
}

HypothesisCheck subsum_gcd_hypothesis(const std::vector<MvPoly>& fs) {
  for (const auto& I : vanishing_subsets(fs)) {
    MvPoly g = gcd(select(fs, I));
    if (!g.is_one()) return {"subsum_gcd", false, "gcd over " + format_set(I) + " = " + format_poly(g)};
  }
  return {"subsum_gcd", true, {}};
}

/// Minimal vanishing subsums that contain a non-constant function.
std::vector<IndexSet> live_blocks(const std::vector<MvPoly>& fs, std::vector<std::string>& notes) {
  std::vector<IndexSet> out;
  for (auto& B : split_vanishing_subsums(fs)) {
    bool constant = std::all_of(B.begin(), B.end(), [&](std::size_t i) { return fs[i].is_constant(); });
    if (constant)
      notes.push_back("block " + format_set(B) + " is constant and dropped");
    else
      out.push_back(std::move(B));
  }
  return out;
}

MvPoly lcm_of(const std::vector<MvPoly>& gs, const FieldSpec& F, unsigned m) {
  MvPoly out = MvPoly::one(F, m);
  for (const auto& g : gs) out = lcm(out, g);
  return out;
}

void finish(AbcReport& r) {
  if (r.verdict == Verdict::hypothesis_violated) return;
  bool ok = std::all_of(r.checks.begin(), r.checks.end(), [](const InequalityCheck& c) { return !c.evaluated || c.holds; });
  if (r.margins && !r.margins->eventually_non_increasing) ok = false;
  r.verdict = ok ? Verdict::holds : Verdict::inequality_failed;
}

Rational sum_A(unsigned d, unsigned k_bar) {
  Rational s = 0;
  for (unsigned i = 1; i + 1 <= k_bar; ++i) s += static_cast<int>(d) - static_cast<int>(i);
  return s;
}

}  // namespace

bool is_circuit(const std::vector<MvPoly>& fs, const IndexSet& T) {
  if (T.empty()) return false;
  if (rank_of(fs, T) + 1 != T.size()) return false;
  for (std::size_t i = 0; i < T.size(); ++i) {
    IndexSet rest = T;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (rank_of(fs, rest) != rest.size()) return false;
  }
  return true;
}

std::vector<IndexSet> vanishing_subsets(const std::vector<MvPoly>& fs) {
  guard_size(fs);
  std::vector<IndexSet> out;
  IndexSet all = iota_set(fs.size());
  for (std::size_t s = 1; s <= fs.size(); ++s)
    for (auto& I : combinations(all, s))
      if (sums_to_zero(fs, I)) out.push_back(std::move(I));
  return out;
}

BmPartition bm_partition(const std::vector<MvPoly>& fs) {
  guard_size(fs);
  std::size_t N = fs.size();
  if (N == 0 || !sums_to_zero(fs, iota_set(N))) throw Error(Errc::not_sum_zero, "the functions do not sum to zero");
  for (const auto& I : vanishing_subsets(fs))
    if (I.size() < N) throw Error(Errc::vanishing_subsum, "subsum over " + format_set(I) + " vanishes");

  BmPartition out;
  IndexSet all = iota_set(N);
  for (std::size_t s = 2; s <= N && out.I_sets.empty(); ++s)
    for (auto& I : combinations(all, s))
      if (is_circuit(fs, I)) {
        out.I_sets.push_back(std::move(I));
        break;
      }
  if (out.I_sets.empty()) throw Error(Errc::invariant_violated, "no circuit among dependent functions");

  IndexSet covered = out.I_sets.front();
  while (covered.size() < N) {
    IndexSet rest;
    for (auto i : all)
      if (!std::binary_search(covered.begin(), covered.end(), i)) rest.push_back(i);
    bool found = false;
    for (std::size_t si = 1; si <= rest.size() && !found; ++si)
      for (const auto& I : combinations(rest, si)) {
        for (std::size_t sj = 1; sj <= covered.size() && !found; ++sj)
          for (const auto& J : combinations(covered, sj)) {
            IndexSet T = I;
            T.insert(T.end(), J.begin(), J.end());
            std::sort(T.begin(), T.end());
            if (!is_circuit(fs, T)) continue;
            out.I_sets.push_back(I);
            out.J_sets.push_back(J);
            covered.insert(covered.end(), I.begin(), I.end());
            std::sort(covered.begin(), covered.end());
            found = true;
            break;
          }
        if (found) break;
      }
    if (!found) throw Error(Errc::invariant_violated, "partition search stalled at " + format_set(covered));
  }
  return out;
}

std::vector<IndexSet> split_vanishing_subsums(const std::vector<MvPoly>& fs) {
  guard_size(fs);
  if (fs.empty() || !sums_to_zero(fs, iota_set(fs.size())))
    throw Error(Errc::not_sum_zero, "the functions do not sum to zero");
  std::vector<IndexSet> out;
  IndexSet rest = iota_set(fs.size());
  while (!rest.empty()) {
    bool found = false;
    for (std::size_t s = 1; s <= rest.size() && !found; ++s)
      for (auto& I : combinations(rest, s))
        if (sums_to_zero(fs, I)) {
          IndexSet left;
          std::set_difference(rest.begin(), rest.end(), I.begin(), I.end(), std::back_inserter(left));
          rest = std::move(left);
          out.push_back(std::move(I));
          found = true;
          break;
        }
    if (!found) throw Error(Errc::not_sum_zero, "remaining functions do not sum to zero");
  }
  return out;
}

std::optional<IndexSet> k_subset_gcd_witness(const std::vector<MvPoly>& fs, unsigned k) {
  guard_size(fs);
  for (auto& I : combinations(iota_set(fs.size()), k))
    if (!gcd(select(fs, I)).is_one()) return I;
  return std::nullopt;
}

unsigned relative_primality_level(const std::vector<MvPoly>& fs) {
  for (unsigned k = 2; k <= fs.size(); ++k)
    if (!k_subset_gcd_witness(fs, k)) return k;
  return static_cast<unsigned>(fs.size()) + 1;
}

AbcConstants abc_constants(const std::vector<MvPoly>& fs, std::optional<unsigned> k) {
  validate_collection(fs);
  bm_partition(fs);
  return assemble(fs, {iota_set(fs.size())}, k ? *k : relative_primality_level(fs));
}

std::vector<std::string> constant_chain_violations(const AbcConstants& K, std::uint32_t characteristic) {
  std::vector<std::string> out;
  auto s = [](auto v) { return std::to_string(v); };
  if (K.a < 1) out.push_back("a = " + s(K.a) + " < 1");
  if (K.d >= 1 && K.a > K.c * (K.d - 1)) out.push_back("a = " + s(K.a) + " > c(d-1) = " + s(K.c * (K.d - 1)));
  if (K.c >= 1) {
    unsigned t = (K.a + K.c - 1) / K.c;
    long long bound = static_cast<long long>(K.a) * t - static_cast<long long>(t) * (t - 1) / 2 * K.c;
    if (K.b < bound) out.push_back("b = " + s(K.b) + " below the staircase bound " + s(bound));
    if (bound < K.a) out.push_back("staircase bound " + s(bound) + " below a = " + s(K.a));
  }
  Rational cap = sum_A(K.d, K.k_bar) * K.c;
  if (Rational(K.a_bar) > cap) out.push_back("a_bar = " + s(K.a_bar) + " > c*sum(d-i) = " + to_string(cap));
  if (characteristic && ipow(characteristic, K.sigma) > K.a)
    out.push_back("p^sigma = " + s(ipow(characteristic, K.sigma)) + " > a = " + s(K.a));
  if (!(K.b >= K.a_bar && K.a_bar >= K.a && K.a >= 1))
    out.push_back("chain b >= a_bar >= a >= 1 broken: b = " + s(K.b) + ", a_bar = " + s(K.a_bar) + ", a = " + s(K.a));
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::hypothesis_violated: return "HYPOTHESIS_VIOLATED";
    case Verdict::inequality_failed: return "INEQUALITY_FAILED";
  }
  return "";
}

const InequalityCheck* AbcReport::find_check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool AbcReport::hypothesis_holds(const std::string& name) const {
  for (const auto& h : hypotheses)
    if (h.name == name) return h.holds;
  return false;
}

std::vector<Rational> default_rho_samples() {
  std::vector<Rational> out;
  for (int r : {0, 1, 2, 3, 4, 6, 8, 12, 16, 24, 32}) out.emplace_back(r);
  return out;
}

AbcReport verify_basic_abc(const MvPoly& f0, const MvPoly& f1, const VerifyOptions& opts) {
  AbcReport r;
  r.theorem = "basic";
  MvPoly f2 = f0 + f1;
  bool nonzero = !f0.is_zero() && !f1.is_zero() && !f2.is_zero();
  r.hypotheses.push_back({"none_zero", nonzero, nonzero ? "" : "one of f0, f1, f0 + f1 is zero"});
  if (!nonzero) {
    r.verdict = Verdict::hypothesis_violated;
    return r;
  }
  MvPoly g = gcd(f0, f1);
  if (!g.is_one()) throw Error(Errc::not_coprime, "gcd(f0, f1) = " + format_poly(g));

  std::uint32_t p = f0.field().characteristic();
  if (p == 0) {
    bool ok = !f0.is_constant() || !f1.is_constant();
    r.hypotheses.push_back({"not_all_constant", ok, ok ? "" : "f0 and f1 are constant"});
  } else {
    auto pth_power = [p](const MvPoly& f) {
      return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
        for (unsigned i = 0; i < f.nvars(); ++i)
          if (t.mono[i] % p) return false;
        return true;
      });
    };
    bool ok = !pth_power(f0) || !pth_power(f1);
    r.hypotheses.push_back({"not_pth_power", ok, ok ? "" : "f0 and f1 are p-th powers"});
  }
  if (!all_hold(r.hypotheses)) {
    r.verdict = Verdict::hypothesis_violated;
    return r;
  }
  std::vector<MvPoly> fs{f0, f1, f2};
  MvPoly R = radical(f0 * f1 * f2);
  r.checks.push_back(degree_check("basic", max_degree(fs), Integer(deg(R)) - 1, "R = " + format_poly(R)));
  r.margins = make_margins(max_profile(fs) - norm_profile(R) + linear(1), opts.rho_samples);
  finish(r);
  return r;
}

AbcReport verify_abc_first(const std::vector<MvPoly>& fs, const VerifyOptions& opts) {
  AbcReport r;
  r.theorem = "abc-first";
  guard_size(fs);
  r.hypotheses = collection_hypotheses(fs);
  if (!all_hold(r.hypotheses)) {
    r.verdict = Verdict::hypothesis_violated;
    return r;
  }
  r.hypotheses.push_back(subsum_gcd_hypothesis(fs));
  if (!r.hypotheses.back().holds) {
    r.verdict = Verdict::hypothesis_violated;
    return r;
  }
  const FieldSpec& F = fs.front().field();
  unsigned m = fs.front().nvars();
  std::uint32_t p = F.characteristic();
  auto blocks = live_blocks(fs, r.notes);
  AbcConstants K = assemble(fs, blocks, relative_primality_level(fs));
  unsigned top = max_degree(fs);

  Integer tsum = 0;
  PiecewiseLinear Nsum = linear(0), Gsum = linear(0);
  std::vector<MvPoly> G(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    MvPoly t = trunc_gcd(fs[j], K.a);
    tsum += deg(t);
    Nsum = Nsum + counting(t).N;
    if (p) {
      G[j] = sigma_radical_gcd(fs[j], K.a, K.sigma);
      Gsum = Gsum + counting(G[j]).N;
    }
  }
  r.checks.push_back(degree_check("abctrsum", top, tsum - K.b));
  if (p) {
    Integer gsum = 0;
    bool dominated = true;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      gsum += deg(G[j]);
      if (!divides(G[j], trunc_gcd(fs[j], K.a))) dominated = false;
    }
    r.checks.push_back(degree_check("abctrsumcharp", top, gsum - K.b));
    auto cmp = degree_check("truncation_comparison", 0, 0);
    cmp.lhs = gsum;
    cmp.rhs = tsum;
    cmp.holds = dominated && gsum <= tsum;
    r.checks.push_back(cmp);
  }

  InequalityCheck ledger = degree_check("divisibility_ledger", 0, 0);
  for (std::size_t bi = 0; bi < K.blocks.size(); ++bi) {
    const auto& B = K.blocks[bi];
    unsigned aB = K.block_constants[bi][0], sB = K.block_constants[bi][3];
    MvPoly FB = MvPoly::one(F, m), rhs = K.delta0[bi];
    for (auto j : B) {
      FB *= fs[j];
      rhs *= p ? sigma_radical_gcd(fs[j], aB, sB) : trunc_gcd(fs[j], aB);
    }
    if (!divides(FB, rhs)) {
      ledger.holds = false;
      ledger.detail += "block " + format_set(B) + " fails; ";
    }
    ledger.lhs += deg(FB);
    ledger.rhs += deg(rhs);
  }
  r.checks.push_back(ledger);

  PiecewiseLinear rhs = (p ? Gsum : Nsum) - linear(K.b);
  r.margins = make_margins(max_profile(fs) - rhs, opts.rho_samples);
  r.constants = std::move(K);
  finish(r);
  return r;
}

AbcReport verify_abc_second(const std::vector<MvPoly>& fs, const VerifyOptions& opts) {
  AbcReport r;
  r.theorem = "abc-second";
  guard_size(fs);
  r.hypotheses = collection_hypotheses(fs);
  if (!all_hold(r.hypotheses)) {
    r.verdict = Verdict::hypothesis_violated;
    return r;
  }
  const FieldSpec& F = fs.front().field();
  unsigned m = fs.front().nvars();
  std::uint32_t p = F.characteristic();
  unsigned n = static_cast<unsigned>(fs.size()) - 1;
  unsigned d = coeff_rank(fs);
  unsigned k = opts.k ? *opts.k : relative_primality_level(fs);
  unsigned k_bar = std::min(k, d);
  unsigned top = max_degree(fs);

  bool k_ok = k >= 2 && k <= n;
  r.hypotheses.push_back({"k_range", k_ok, k_ok ? "" : "k = " + std::to_string(k) + " outside [2, " + std::to_string(n) + "]"});
  HypothesisCheck krel{"k_subset_gcd", true, {}};
  if (auto w = k_subset_gcd_witness(fs, std::min<unsigned>(k, n + 1)))
    krel = {"k_subset_gcd", false, "gcd over " + format_set(*w) + " = " + format_poly(gcd(select(fs, *w)))};
  r.hypotheses.push_back(krel);
  auto vanishing = vanishing_subsets(fs);
  std::vector<IndexSet> proper;
  for (const auto& I : vanishing)
    if (I.size() < fs.size()) proper.push_back(I);
  bool no_sub = proper.empty();
  bool need_no_sub = k_bar > 2;
  r.hypotheses.push_back({"no_vanishing_subsum", no_sub || !need_no_sub,
                          no_sub ? "" : (need_no_sub ? "" : "not required for k_bar = 2; ") + format_set(proper.front()) + " vanishes"});
  r.hypotheses.push_back(subsum_gcd_hypothesis(fs));
  bool main_ok = all_hold(r.hypotheses);
  bool sf_ok = krel.holds && k_ok && r.hypotheses.back().holds;

  std::vector<MvPoly> S(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j) S[j] = square_free_part(fs[j]);
  MvPoly SF = lcm_of(S, F, m);
  MvPoly prodF = product(fs, F, m);
  unsigned c = p ? pow_p(p, collection_index(fs) - 1) : 1;

  if (main_ok) {
    AbcConstants K;
    if (k_bar == 2) {
      K = assemble(fs, live_blocks(fs, r.notes), k);
      K.a_bar = K.a;
      r.notes.push_back("k_bar = 2: a_bar = a and b taken from the first version");
    } else {
      K = assemble(fs, {iota_set(fs.size())}, k);
    }
    MvPoly T = layered_gcd(prodF, SF, K.a_bar);
    r.checks.push_back(degree_check("abctrprod", top, Integer(deg(T)) - K.b));
    r.margins = make_margins(max_profile(fs) - (counting(T).N - linear(K.b)), opts.rho_samples);
    r.constants = std::move(K);
  } else {
    r.checks.push_back(skipped("abctrprod", "hypotheses of the second version fail"));
  }

  if (sf_ok) {
    Rational A = sum_A(d, k_bar) * c;
    std::vector<std::string> sink;
    auto blocks = live_blocks(fs, sink);
    InequalityCheck sf = degree_check("abcsf", 0, 0);
    bool first = true;
    for (const auto& B : blocks) {
      std::vector<MvPoly> SB;
      unsigned topB = 0;
      for (auto j : B) {
        SB.push_back(S[j]);
        topB = std::max(topB, deg(fs[j]));
      }
      Rational rhs = A * (static_cast<int>(deg(lcm_of(SB, F, m))) - 1);
      Integer rhs_floor = floor_of(rhs);
      if (first || Integer(topB) - rhs_floor > sf.lhs - sf.rhs) {
        sf.lhs = topB;
        sf.rhs = rhs_floor;
        first = false;
      }
      if (Integer(topB) > rhs_floor) sf.holds = false;
      sf.detail += format_set(B) + ": " + std::to_string(topB) + " <= " + to_string(rhs) + "; ";
    }
    r.checks.push_back(sf);

    if (!proper.empty() && k_bar > 2) {
      unsigned max_abar = 0, min_b = ~0u;
      for (const auto& B : blocks) {
        BlockData D = block_constants(fs, B, k);
        max_abar = std::max(max_abar, D.a_bar);
        min_b = std::min(min_b, D.b);
      }
      MvPoly T = layered_gcd(prodF, SF, max_abar);
      auto fb = degree_check("per_index_fallback", top, Integer(deg(T)) - min_b,
                             "max a_bar_j = " + std::to_string(max_abar) + ", min b_j = " + std::to_string(min_b));
      r.checks.push_back(fb);
      r.notes.push_back("vanishing subsums: max a_bar_j and min b_j are reported separately");
    }

    bool bb = p == 0 && fs.size() >= 4 && !k_subset_gcd_witness(fs, 3);
    if (bb) {
      MvPoly R = SF;
      r.checks.push_back(degree_check("BB", top, Integer(2 * static_cast<int>(n) - 3) * (Integer(deg(R)) - 1)));
    } else {
      r.checks.push_back(skipped("BB", "needs characteristic 0, n >= 3 and coprime triples"));
    }
  } else {
    r.checks.push_back(skipped("abcsf", "k-subset gcd or subsum gcd condition fails"));
  }

  if (!main_ok) {
    r.verdict = Verdict::hypothesis_violated;
    return r;
  }
  finish(r);
  return r;
}

AbcReport verify_corollaries(const std::vector<MvPoly>& fs, const VerifyOptions& opts) {
  if (!fs.empty() && fs.front().field().characteristic() != 0)
    throw Error(Errc::wrong_characteristic, "the de Bondt bounds are stated in characteristic 0");
  AbcReport r = verify_abc_first(fs, opts);
  r.theorem = "corollaries";
  if (r.verdict == Verdict::hypothesis_violated) return r;
  const AbcConstants& K = *r.constants;
  unsigned top = max_degree(fs);
  std::vector<InequalityCheck> checks;

  Integer ra = 0, rsum = 0;
  unsigned C = 0;
  for (const auto& f : fs) {
    ra += deg(trunc_gcd(f, K.a));
    rsum += deg(radical(f));
    if (f.is_constant()) ++C;
  }
  checks.push_back(degree_check("deBondtFour", top, ra - K.a * (K.a + 1) / 2));
  unsigned n = static_cast<unsigned>(fs.size()) - 1;
  if (K.d > n - C) checks.push_back(skipped("deBondtFive", "range [d, n - C] is empty"));
  for (unsigned A = K.d; A + C <= n; ++A)
    checks.push_back(degree_check("deBondtFive[A=" + std::to_string(A) + "]", top, Integer(A) * rsum - A * (A + 1) / 2));

  AbcReport second = verify_abc_second(fs, opts);
  for (const auto& c : second.checks)
    if (c.name == "abcsf" || c.name == "BB") checks.push_back(c);
  r.checks.insert(r.checks.end(), checks.begin(), checks.end());
  r.notes.insert(r.notes.end(), second.notes.begin(), second.notes.end());
  finish(r);
  return r;
}

}  // namespace nabc
