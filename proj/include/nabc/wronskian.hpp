#pragma once

#include <optional>
#include <vector>

#include "nabc/mvpoly.hpp"

namespace nabc {

/// det [D^{gamma^i} f_j]. Throws DIMENSION_MISMATCH.
MvPoly gen_wronskian(const std::vector<MvPoly>& fs, const std::vector<Monomial>& gammas);

struct WronskianCertificate {
  std::vector<MvPoly> functions;
  std::vector<Monomial> gammas;  // gammas[0] = 0
  unsigned step_c = 1;
  MvPoly determinant;
};

/// Greedy search: gamma^i is the first multi-index in ascending graded-lex order
/// with |gamma^i| <= |gamma^{i-1}| + step_c that raises the rank of the Hasse
/// derivative matrix over the fraction field.
/// Throws NOT_F_INDEPENDENT or SEARCH_EXHAUSTED.
WronskianCertificate find_certificate(const std::vector<MvPoly>& fs, unsigned step_c);

/// Re-evaluates the determinant and the step bound.
bool check_certificate(const WronskianCertificate& cert);

struct IndependenceResult {
  /// Smallest s >= 1 with fs independent over the p^s-th powers.
  unsigned index_s = 1;
  /// Search cap: first s with p^s above every total degree.
  unsigned s_max = 1;
  /// For index_s > 1: Q with sum Q_j f_j = 0 and every exponent of Q_j divisible
  /// by p^(index_s - 1).
  std::optional<std::vector<MvPoly>> witness;
};

/// Whether fs stay linearly independent over the field of p^s-th powers,
/// decided by the rank of the residue matrix f_j = sum_beta z^beta g_{j,beta}(z^(p^s)).
bool independent_over_powers(const std::vector<MvPoly>& fs, unsigned s);

/// Q_j supported on exponents in p^s Z^m with sum Q_j f_j = 0, from Cramer's rule
/// on a minimal dependent set of residue rows; nullopt when independent.
std::optional<std::vector<MvPoly>> power_relation(const std::vector<MvPoly>& fs, unsigned s);

/// The same question answered by a bounded-degree syzygy solve: unknown
/// coefficients of Q_j on monomials z^(p^s mu) of total degree <= degree_bound.
std::optional<std::vector<MvPoly>> syzygy_relation(const std::vector<MvPoly>& fs, unsigned s, unsigned degree_bound);

/// Throws WRONG_CHARACTERISTIC or NOT_F_INDEPENDENT.
IndependenceResult index_of_independence(const std::vector<MvPoly>& fs);

/// Largest index of independence over the maximal F-independent subsets of fs
/// (1 in characteristic 0).
unsigned collection_index(const std::vector<MvPoly>& fs);

}  // namespace nabc
