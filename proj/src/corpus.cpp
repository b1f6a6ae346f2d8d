#include "nabc/corpus.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "nabc/abc.hpp"
#include "nabc/error.hpp"

namespace nabc {

namespace {

constexpr int kAttempts = 64;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  /// Uniform in [lo, hi] without relying on distribution implementations.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return rng_() & 1; }

 private:
  std::mt19937_64 rng_;
};

Coeff nonzero_coeff(Draw& draw, const FieldSpec& F) {
  if (F.characteristic() == 0) {
    long long v = draw.range(1, 3);
    return F.from_int(draw.coin() ? v : -v);
  }
  return F.from_int(draw.range(1, F.p() - 1));
}

/// A monic factor of degree 1 or 2 with a nonzero constant term.
MvPoly random_factor(Draw& draw, const FieldSpec& F, unsigned m, unsigned max_degree) {
  unsigned deg = max_degree >= 2 && draw.range(0, 3) == 0 ? 2 : 1;
  std::vector<Term> terms;
  Monomial lead(m);
  lead.set(static_cast<unsigned>(draw.range(0, m - 1)), deg);
  terms.push_back({lead, F.one()});
  for (unsigned v = 0; v < m; ++v)
    if (draw.range(0, 2) == 0) terms.push_back({Monomial::unit(m, v, 1), nonzero_coeff(draw, F)});
  terms.push_back({Monomial(m), nonzero_coeff(draw, F)});
  return MvPoly::from_terms(F, m, std::move(terms));
}

/// Factors already handed to some function of the instance.
using Used = std::vector<MvPoly>;

std::optional<MvPoly> fresh_factor(Draw& draw, const FieldSpec& F, unsigned m, unsigned max_degree, Used& used) {
  for (int tries = 0; tries < 8; ++tries) {
    MvPoly P = random_factor(draw, F, m, max_degree);
    if (std::none_of(used.begin(), used.end(), [&](const MvPoly& q) { return q == P; })) {
      used.push_back(P);
      return P;
    }
  }
  return std::nullopt;
}

/// Functions built from factors no other function uses; in k-wise mode
/// neighbours additionally share one factor.
std::vector<MvPoly> random_group(Draw& draw, const FieldSpec& F, const CorpusSpec& spec, unsigned count, Used& used) {
  std::vector<MvPoly> out(count, MvPoly::one(F, spec.m));
  if (spec.mode == Coprimality::kwise && count >= 2) {
    for (unsigned i = 0; i + 1 < count; i += 2)
      if (auto shared = fresh_factor(draw, F, spec.m, 1, used)) {
        out[i] *= *shared;
        out[i + 1] *= *shared;
      }
  }
  for (auto& f : out) {
    int target = static_cast<int>(draw.range(0, spec.degree));
    while (f.total_degree() < target) {
      auto P = spec.mode == Coprimality::none ? std::optional<MvPoly>(random_factor(draw, F, spec.m, target - f.total_degree()))
                                              : fresh_factor(draw, F, spec.m, target - f.total_degree(), used);
      if (!P) break;
      unsigned e = 1;
      while (draw.range(0, 2) == 0 && f.total_degree() + static_cast<int>(e + 1) * P->total_degree() <= target) ++e;
      if (f.total_degree() + static_cast<int>(e) * P->total_degree() > static_cast<int>(spec.degree)) break;
      f *= P->pow(e);
    }
    f = f.scale(nonzero_coeff(draw, F));
  }
  return out;
}

bool acceptable(const std::vector<MvPoly>& fs, const CorpusSpec& spec) {
  for (const auto& f : fs)
    if (f.is_zero() || f.total_degree() > static_cast<int>(spec.degree)) return false;
  if (std::all_of(fs.begin(), fs.end(), [](const MvPoly& f) { return f.is_constant(); })) return false;
  if (spec.mode == Coprimality::pairwise) return !k_subset_gcd_witness(fs, 2);
  if (spec.mode == Coprimality::kwise) return !k_subset_gcd_witness(fs, std::min<unsigned>(3, fs.size()));
  return true;
}

std::vector<MvPoly> closed_group(Draw& draw, const FieldSpec& F, const CorpusSpec& spec, unsigned size, Used& used) {
  auto fs = random_group(draw, F, spec, size - 1, used);
  MvPoly last = -sum(fs, F, spec.m);
  for (int tries = 0; tries < 16 && spec.mode == Coprimality::pairwise; ++tries) {
    bool coprime = !last.is_zero() && std::all_of(fs.begin(), fs.end(), [&](const MvPoly& f) { return gcd(f, last).is_one(); });
    if (coprime) break;
    for (auto& f : fs) f = f.scale(nonzero_coeff(draw, F));
    last = -sum(fs, F, spec.m);
  }
  fs.push_back(last);
  return fs;
}

}  // namespace

std::vector<Instance> generate_corpus(const CorpusSpec& spec) {
  if (spec.n > 12) throw Error(Errc::guard_exceeded, "n = " + std::to_string(spec.n) + " exceeds 12");
  if (spec.degree > 10) throw Error(Errc::guard_exceeded, "degree " + std::to_string(spec.degree) + " exceeds 10");
  if (spec.m == 0 || spec.m > kMaxVars) throw Error(Errc::guard_exceeded, "unsupported number of variables");
  if (spec.n < 1) throw Error(Errc::validation_error, "n must be at least 1");
  std::vector<Instance> out;
  Draw draw(spec.seed);
  for (std::size_t i = 0; i < spec.count; ++i) {
    bool positive = spec.chars == CharMode::positive || (spec.chars == CharMode::mixed && i % 2 == 1);
    FieldSpec F = positive ? FieldSpec::prime_field(spec.p) : FieldSpec::rational_padic(spec.p);
    unsigned min_group = spec.mode == Coprimality::none ? 2 : spec.mode == Coprimality::pairwise ? 3 : 4;
    bool split = spec.vanishing_subsums && i % 2 == 0 && spec.n + 1 >= 2 * min_group;
    Instance inst;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      std::vector<MvPoly> fs;
      Used used;
      if (split) {
        unsigned first = static_cast<unsigned>(draw.range(min_group, spec.n + 1 - min_group));
        fs = closed_group(draw, F, spec, first, used);
        auto rest = closed_group(draw, F, spec, spec.n + 1 - first, used);
        fs.insert(fs.end(), rest.begin(), rest.end());
      } else {
        fs = closed_group(draw, F, spec, spec.n + 1, used);
      }
      if (!acceptable(fs, spec)) continue;
      inst.polys = std::move(fs);
      break;
    }
    if (inst.polys.empty()) throw Error(Errc::search_exhausted, "no acceptable instance after " + std::to_string(kAttempts) + " draws");
    char id[64];
    std::snprintf(id, sizeof id, "s%llu-%04zu", static_cast<unsigned long long>(spec.seed), i);
    inst.id = id;
    inst.field = F;
    inst.vars = default_var_names(spec.m);
    inst.params = {{"mode", spec.mode == Coprimality::pairwise ? "pairwise" : spec.mode == Coprimality::kwise ? "k-wise" : "none"},
                   {"vanishing_subsums", split}};
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace nabc
