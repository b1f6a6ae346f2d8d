#pragma once

#include "nabc/mvpoly.hpp"

namespace nabc {

/// binom(alpha, beta) = prod_i binom(alpha_i, beta_i) as a field element.
/// Reduced mod p through Lucas digits in positive characteristic.
/// Throws INDEX_NOT_DOMINATING unless beta <= alpha componentwise.
Coeff multinomial(const Monomial& alpha, const Monomial& beta, const FieldSpec& field);

/// D^gamma f = sum_{alpha >= gamma} binom(alpha, gamma) a_alpha z^(alpha - gamma).
/// Throws DIMENSION_MISMATCH.
MvPoly hasse_derivative(const MvPoly& f, const Monomial& gamma);

/// D_var^k f, the Hasse derivative along one coordinate direction.
MvPoly hasse_derivative(const MvPoly& f, unsigned var, unsigned k);

/// True iff f = g^(p^s) for some g with coefficients in the represented field.
/// Throws WRONG_CHARACTERISTIC.
bool is_in_E_ps(const MvPoly& f, unsigned s);

/// g with g^(p^s) = f. Throws WRONG_CHARACTERISTIC or NOT_A_POWER.
MvPoly poly_pth_root(const MvPoly& f, unsigned s);

}  // namespace nabc
