#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nabc/mvpoly.hpp"
#include "nabc/piecewise.hpp"
#include "nabc/wronskian.hpp"

namespace nabc {

using IndexSet = std::vector<std::size_t>;

struct BmPartition {
  std::vector<IndexSet> I_sets;
  /// J_sets[l] pairs with I_sets[l + 1]: I_{l+1} u J_l is a circuit.
  std::vector<IndexSet> J_sets;
  std::size_t u() const { return I_sets.size(); }
};

/// Minimal dependent set: rank |T| - 1 with every T \ {t} independent.
bool is_circuit(const std::vector<MvPoly>& fs, const IndexSet& T);

/// Throws NOT_SUM_ZERO or VANISHING_SUBSUM.
BmPartition bm_partition(const std::vector<MvPoly>& fs);

/// Minimal vanishing subsums, smallest (size, then lexicographic) first.
/// Throws NOT_SUM_ZERO.
std::vector<IndexSet> split_vanishing_subsums(const std::vector<MvPoly>& fs);

/// Every nonempty index set whose functions sum to zero, in (size, lex) order.
std::vector<IndexSet> vanishing_subsets(const std::vector<MvPoly>& fs);

/// Smallest k >= 2 such that every k functions have gcd 1; fs.size() + 1 if none.
unsigned relative_primality_level(const std::vector<MvPoly>& fs);

/// First k-subset (lex order) whose gcd is not 1.
std::optional<IndexSet> k_subset_gcd_witness(const std::vector<MvPoly>& fs, unsigned k);

struct BlockCertificate {
  std::size_t block = 0;      // position in the Brownawell-Masser partition
  IndexSet indices;           // functions entering the Wronskian
  WronskianCertificate cert;  // gammas with step c
};

struct AbcConstants {
  unsigned d = 0;
  unsigned c = 1;
  unsigned a = 0;
  unsigned b = 0;
  unsigned a_bar = 0;
  unsigned sigma = 0;
  unsigned k = 2;
  unsigned k_bar = 2;
  /// Pooled nonzero multi-indices gamma^u..gamma^{n-1}, ascending |gamma|.
  std::vector<Monomial> gammas_used;
  std::vector<BlockCertificate> certificates;
  /// Minimal vanishing subsums the constants were assembled from (one block
  /// when there are no vanishing subsums), with their partitions in global indices.
  std::vector<IndexSet> blocks;
  std::vector<BmPartition> partitions;
  /// Per block, W_0 ... W_{u-1}: Delta_0 up to a nonzero constant.
  std::vector<MvPoly> delta0;
  /// Per block a, b, a_bar, sigma before they were combined.
  std::vector<std::array<unsigned, 4>> block_constants;
};

/// Throws NOT_SUM_ZERO, VANISHING_SUBSUM, ZERO_POLY, VALIDATION_ERROR (all
/// constant), SEARCH_EXHAUSTED, INVARIANT_VIOLATED (constant chain broken).
/// k defaults to relative_primality_level(fs).
AbcConstants abc_constants(const std::vector<MvPoly>& fs, std::optional<unsigned> k = std::nullopt);

/// Violated relations among a, b, a_bar, sigma, c, d; empty when all hold.
std::vector<std::string> constant_chain_violations(const AbcConstants& K, std::uint32_t characteristic);

struct HypothesisCheck {
  std::string name;
  bool holds = true;
  std::string witness;
};

struct InequalityCheck {
  std::string name;
  bool evaluated = true;
  bool holds = true;
  /// Degree-level sides; slack = rhs - lhs.
  Integer lhs = 0;
  Integer rhs = 0;
  std::string detail;
};

struct MarginProfile {
  /// rho -> LHS(rho) - RHS(rho) of the O(1)-bearing inequality.
  PiecewiseLinear excess;
  std::vector<std::pair<Rational, Rational>> samples;
  /// Final slope must be <= 0 and samples past the last breakpoint non-increasing.
  bool eventually_non_increasing = true;
};

enum class Verdict { holds, hypothesis_violated, inequality_failed };
std::string_view verdict_name(Verdict v);

struct AbcReport {
  std::string id;
  std::string theorem;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<AbcConstants> constants;
  std::vector<InequalityCheck> checks;
  std::optional<MarginProfile> margins;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::holds;

  const InequalityCheck* find_check(const std::string& name) const;
  bool hypothesis_holds(const std::string& name) const;
};

struct VerifyOptions {
  std::vector<Rational> rho_samples;  // empty: default radii
  std::optional<unsigned> k;          // second version: forced k
};

std::vector<Rational> default_rho_samples();

/// Basic ABC for f0 + f1 = f2. Throws NOT_COPRIME.
AbcReport verify_basic_abc(const MvPoly& f0, const MvPoly& f1, const VerifyOptions& opts = {});

/// Generalized ABC, first version, for f_0 + ... + f_n = 0.
AbcReport verify_abc_first(const std::vector<MvPoly>& fs, const VerifyOptions& opts = {});

/// Generalized ABC, second version, together with the squarefree corollary and,
/// in characteristic 0 with coprime triples, the (2n-3)-bound.
AbcReport verify_abc_second(const std::vector<MvPoly>& fs, const VerifyOptions& opts = {});

/// De Bondt type degree bounds in characteristic 0. Throws WRONG_CHARACTERISTIC.
AbcReport verify_corollaries(const std::vector<MvPoly>& fs, const VerifyOptions& opts = {});

}  // namespace nabc
