#pragma once

#include <vector>

#include "nabc/mvpoly.hpp"
#include "nabc/piecewise.hpp"

namespace nabc {

/// log_p |f|_r at r = p^rho: max over terms of log_abs(a_gamma) + rho*|gamma|.
LogValue log_gauss_norm(const MvPoly& f, const Rational& rho);

/// rho -> log_p |f|_{p^rho}, the upper envelope of one line per support degree.
/// Throws ZERO_POLY.
PiecewiseLinear norm_profile(const MvPoly& f);

struct CountingData {
  /// n_f(0,0), the smallest total degree in the support.
  int n_at_zero = 0;
  /// Jumps of the step function rho -> n_f(0, p^rho); n_values[i] holds on
  /// [breakpoints[i-1], breakpoints[i]) and n_values[0] below breakpoints[0].
  std::vector<Rational> breakpoints;
  std::vector<int> n_values;
  /// rho -> N_f(0, p^rho).
  PiecewiseLinear N;

  /// Right-continuous: at a jump the larger value is taken.
  int n_at(const Rational& rho) const;
};

/// Throws ZERO_POLY.
CountingData counting(const MvPoly& f);

/// C_f with N_f(rho) = log|f|_rho + C_f, checked at every breakpoint and on both
/// tails. Throws ZERO_POLY or NOT_CONSTANT.
Rational poisson_constant(const MvPoly& f);

/// Counting data of trunc_gcd(f, ell). Throws ZERO_POLY.
CountingData truncated_counting(const MvPoly& f, unsigned ell);

/// Drops every term of total degree above `order`. Norm and counting data of the
/// result describe a power series only for rho small enough that the discarded
/// tail cannot reach the envelope.
MvPoly truncate_series(const MvPoly& f, unsigned order);

}  // namespace nabc
