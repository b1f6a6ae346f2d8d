#pragma once

#include <cstddef>
#include <vector>

#include "nabc/mvpoly.hpp"

namespace nabc {

struct Factor {
  MvPoly poly;  // monic irreducible over the base field
  unsigned multiplicity;
};

struct OracleOptions {
  unsigned degree_cap = 8;
  /// Known irreducibles tried before the cofactor is certified.
  std::vector<MvPoly> hints;
  /// Upper bound on monic candidates enumerated for the finite-field catalogue.
  std::size_t catalogue_budget = 200000;
};

/// Irreducible factorization by trial division, built only on multiplication and
/// exact division so that it can check the gcd-based algorithms.
///
/// Over PRIME_FIELD every monic irreducible up to a budget-dependent degree D is
/// enumerated. Any cofactor left over must be certified irreducible (degree 1 in
/// some variable with constant leading part, degree below 2(D+1), or a root-free
/// univariate cubic over Q); otherwise the oracle gives up with DEGREE_TOO_LARGE.
/// Throws ZERO_POLY and DEGREE_TOO_LARGE.
std::vector<Factor> squarefree_factor_oracle(const MvPoly& f, const OracleOptions& opts = {});

/// All monic irreducibles over F_p in m variables of total degree <= max_degree,
/// ascending by degree. Cached per (p, m, max_degree).
const std::vector<MvPoly>& prime_field_irreducibles(const FieldSpec& field, unsigned m, unsigned max_degree);

/// Largest catalogue degree whose enumeration fits into the budget.
unsigned catalogue_degree(std::uint32_t p, unsigned m, std::size_t budget);

}  // namespace nabc
