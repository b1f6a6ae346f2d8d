#include "nabc/nevanlinna.hpp"

#include <algorithm>
#include <map>

#include "nabc/error.hpp"
#include "nabc/radicals.hpp"

namespace nabc {

namespace {

void require_nonzero(const MvPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_poly, "counting data of the zero polynomial");
}

}  // namespace

LogValue log_gauss_norm(const MvPoly& f, const Rational& rho) {
  LogValue best = LogValue::neg_infinity();
  for (const auto& t : f.terms()) {
    LogValue v = f.field().log_abs(t.coeff) + LogValue(Rational(rho * t.mono.total_degree()));
    if (v > best) best = v;
  }
  return best;
}

PiecewiseLinear norm_profile(const MvPoly& f) {
  require_nonzero(f);
  std::map<unsigned, Rational> best;
  for (const auto& t : f.terms()) {
    Rational v = f.field().log_abs(t.coeff).value();
    auto [it, inserted] = best.emplace(t.mono.total_degree(), v);
    if (!inserted && v > it->second) it->second = v;
  }
  std::vector<Line> lines;
  for (const auto& [deg, intercept] : best) lines.push_back({Rational(deg), intercept});
  return PiecewiseLinear::upper_envelope(lines);
}

int CountingData::n_at(const Rational& rho) const {
  auto i = std::upper_bound(breakpoints.begin(), breakpoints.end(), rho) - breakpoints.begin();
  return n_values[static_cast<std::size_t>(i)];
}

CountingData counting(const MvPoly& f) {
  require_nonzero(f);
  PiecewiseLinear profile = norm_profile(f);
  CountingData data;
  data.n_at_zero = f.min_degree();
  data.breakpoints = profile.breakpoints();
  for (const auto& piece : profile.pieces()) data.n_values.push_back(static_cast<int>(piece.slope.get_num().get_si()));
  // Integrate n from the normalisation N(rho) = n(0,0) * rho on the lowest piece.
  std::vector<Line> pieces{{Rational(data.n_values.front()), Rational(0)}};
  for (std::size_t i = 0; i < data.breakpoints.size(); ++i) {
    const Rational& b = data.breakpoints[i];
    Rational value = pieces.back().at(b);
    Rational slope(data.n_values[i + 1]);
    pieces.push_back({slope, Rational(value - slope * b)});
  }
  data.N = PiecewiseLinear(data.breakpoints, std::move(pieces));
  return data;
}

Rational poisson_constant(const MvPoly& f) {
  CountingData data = counting(f);
  PiecewiseLinear profile = norm_profile(f);
  std::vector<Rational> probes = data.breakpoints;
  Rational lo = probes.empty() ? Rational(0) : probes.front();
  Rational hi = probes.empty() ? Rational(0) : probes.back();
  probes.push_back(lo - 1);
  probes.push_back(hi + 1);
  Rational c = data.N(probes.front()) - log_gauss_norm(f, probes.front()).value();
  for (const auto& rho : probes) {
    Rational ci = data.N(rho) - log_gauss_norm(f, rho).value();
    if (ci != c)
      throw Error(Errc::not_constant, "N - log|f| is " + to_string(c) + " and " + to_string(ci) + " at rho = " + to_string(rho));
  }
  if (data.N.initial_slope() != profile.initial_slope() || data.N.final_slope() != profile.final_slope())
    throw Error(Errc::not_constant, "tail slopes of N and log|f| differ");
  return c;
}

CountingData truncated_counting(const MvPoly& f, unsigned ell) {
  require_nonzero(f);
  return counting(trunc_gcd(f, ell));
}

MvPoly truncate_series(const MvPoly& f, unsigned order) {
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (t.mono.total_degree() <= order) kept.push_back(t);
  return MvPoly::from_sorted_terms(f.field(), f.nvars(), std::move(kept));
}

}  // namespace nabc
