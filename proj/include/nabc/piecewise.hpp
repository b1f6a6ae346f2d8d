#pragma once

#include <string>
#include <vector>

#include "nabc/rational.hpp"

namespace nabc {

struct Line {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const Line&, const Line&) = default;
};

/// Continuous piecewise-linear function on the whole rational line.
/// pieces()[0] applies below breakpoints()[0]; pieces()[i] on [b_{i-1}, b_i).
class PiecewiseLinear {
 public:
  PiecewiseLinear() : pieces_{Line{0, 0}} {}
  explicit PiecewiseLinear(Line line) : pieces_{std::move(line)} {}
  /// Throws INVARIANT_VIOLATED if adjacent pieces disagree at a breakpoint.
  PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Line> pieces);

  /// max of finitely many lines, a convex function; lines must be nonempty.
  static PiecewiseLinear upper_envelope(const std::vector<Line>& lines);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Line>& pieces() const { return pieces_; }

  /// Index of the piece in force at x, taking the right-hand piece at a breakpoint.
  std::size_t piece_index(const Rational& x) const;
  Rational operator()(const Rational& x) const { return pieces_[piece_index(x)].at(x); }
  /// Right derivative at x.
  const Rational& slope_at(const Rational& x) const { return pieces_[piece_index(x)].slope; }
  const Rational& initial_slope() const { return pieces_.front().slope; }
  const Rational& final_slope() const { return pieces_.back().slope; }
  bool is_convex() const;

  PiecewiseLinear scaled(const Rational& c) const;
  friend PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b);
  friend PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b);
  friend PiecewiseLinear max(const PiecewiseLinear& a, const PiecewiseLinear& b);
  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

  /// "rho slope value" rows, one per breakpoint, after a "-inf slope" row.
  std::string table() const;

 private:
  std::vector<Rational> breaks_;
  std::vector<Line> pieces_;

  void simplify();
};

}  // namespace nabc
