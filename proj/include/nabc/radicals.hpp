#pragma once

#include <vector>

#include "nabc/mvpoly.hpp"

namespace nabc {

/// R(f) = lcm_j f / gcd(f, df/dz_j), monic. Throws ZERO_POLY.
MvPoly radical(const MvPoly& f);

/// R_{p^s}(f): squarefree, containing exactly the irreducible factors of f whose
/// multiplicity is not divisible by p^(s+1). s = 0 gives radical(f).
/// Throws ZERO_POLY, WRONG_CHARACTERISTIC, NOT_A_POWER.
MvPoly higher_radical(const MvPoly& f, unsigned s);

struct RadicalChain {
  MvPoly f;
  /// entries[s] = R_{p^s}(f) for s = 0..terminal_s.
  std::vector<MvPoly> entries;
  /// First s with p^(s+1) > deg f; the chain is constant from here on.
  unsigned terminal_s = 0;
};

RadicalChain radical_chain(const MvPoly& f);

/// Level s at which R_{p^s}(f) already equals S(f) (0 in characteristic 0).
unsigned sqfree_level(const MvPoly& f);

/// S(f): the monic squarefree polynomial with the same irreducible factors as f.
/// Throws ZERO_POLY.
MvPoly square_free_part(const MvPoly& f);

/// gcd(f, R^e) for squarefree R, built one layer of R at a time so that R^e is
/// never expanded. Each irreducible P | R appears with multiplicity min(e, mult_P f).
MvPoly layered_gcd(const MvPoly& f, const MvPoly& R, unsigned e);

/// gcd(f, S(f)^ell). Throws ZERO_POLY.
MvPoly trunc_gcd(const MvPoly& f, unsigned ell);

/// gcd(f, R_{p^sigma}(f)^a). Throws ZERO_POLY or WRONG_CHARACTERISTIC.
MvPoly sigma_radical_gcd(const MvPoly& f, unsigned a, unsigned sigma);

}  // namespace nabc
