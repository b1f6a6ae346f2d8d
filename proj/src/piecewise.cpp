#include "nabc/piecewise.hpp"

#include <algorithm>
#include <sstream>

#include "nabc/error.hpp"

namespace nabc {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Line> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breaks_.size() + 1)
    throw Error(Errc::invariant_violated, "piece count must exceed breakpoint count by one");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (i > 0 && !(breaks_[i - 1] < breaks_[i])) throw Error(Errc::invariant_violated, "breakpoints not ascending");
    if (pieces_[i].at(breaks_[i]) != pieces_[i + 1].at(breaks_[i]))
      throw Error(Errc::invariant_violated, "discontinuity at rho = " + to_string(breaks_[i]));
  }
  simplify();
}

PiecewiseLinear PiecewiseLinear::upper_envelope(const std::vector<Line>& lines) {
  PiecewiseLinear r(lines.at(0));
  for (std::size_t i = 1; i < lines.size(); ++i) r = max(r, PiecewiseLinear(lines[i]));
  return r;
}

std::size_t PiecewiseLinear::piece_index(const Rational& x) const {
  return static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin());
}

bool PiecewiseLinear::is_convex() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i].slope < pieces_[i - 1].slope) return false;
  return true;
}

void PiecewiseLinear::simplify() {
  std::vector<Rational> breaks;
  std::vector<Line> pieces{pieces_.front()};
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (pieces_[i + 1] == pieces.back()) continue;
    breaks.push_back(breaks_[i]);
    pieces.push_back(pieces_[i + 1]);
  }
  breaks_ = std::move(breaks);
  pieces_ = std::move(pieces);
}

PiecewiseLinear PiecewiseLinear::scaled(const Rational& c) const {
  PiecewiseLinear r = *this;
  for (auto& l : r.pieces_) {
    l.slope *= c;
    l.intercept *= c;
  }
  r.simplify();
  return r;
}

namespace {

std::vector<Rational> merged_breaks(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  std::vector<Rational> all = a.breakpoints();
  all.insert(all.end(), b.breakpoints().begin(), b.breakpoints().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

/// Piece of f in force on the i-th interval of a refinement with breakpoints `breaks`.
const Line& piece_on(const PiecewiseLinear& f, const std::vector<Rational>& breaks, std::size_t i) {
  return i == 0 ? f.pieces().front() : f.pieces()[f.piece_index(breaks[i - 1])];
}

template <class Op>
PiecewiseLinear combine(const PiecewiseLinear& a, const PiecewiseLinear& b, Op op) {
  auto breaks = merged_breaks(a, b);
  std::vector<Line> pieces;
  for (std::size_t i = 0; i <= breaks.size(); ++i) {
    const Line& la = piece_on(a, breaks, i);
    const Line& lb = piece_on(b, breaks, i);
    pieces.push_back({op(la.slope, lb.slope), op(la.intercept, lb.intercept)});
  }
  return PiecewiseLinear(std::move(breaks), std::move(pieces));
}

}  // namespace

PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

PiecewiseLinear max(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  auto coarse = merged_breaks(a, b);
  std::vector<Rational> breaks;
  std::vector<Line> pieces;
  for (std::size_t i = 0; i <= coarse.size(); ++i) {
    const Line& la = piece_on(a, coarse, i);
    const Line& lb = piece_on(b, coarse, i);
    bool has_lo = i > 0, has_hi = i < coarse.size();
    // Split the interval where the two lines cross.
    std::vector<Rational> cuts;
    if (la.slope != lb.slope) {
      Rational x = (lb.intercept - la.intercept) / (la.slope - lb.slope);
      if ((!has_lo || coarse[i - 1] < x) && (!has_hi || x < coarse[i])) cuts.push_back(x);
    }
    for (std::size_t j = 0; j <= cuts.size(); ++j) {
      // A sample point strictly inside the j-th sub-interval.
      Rational lo = j == 0 ? (has_lo ? coarse[i - 1] : Rational(0)) : cuts[j - 1];
      Rational hi = j == cuts.size() ? (has_hi ? coarse[i] : Rational(0)) : cuts[j];
      bool lo_known = j > 0 || has_lo;
      bool hi_known = j < cuts.size() || has_hi;
      Rational x = lo_known && hi_known ? Rational((lo + hi) / 2) : lo_known ? Rational(lo + 1) : hi_known ? Rational(hi - 1) : Rational(0);
      if (!(j == 0 && !has_lo)) breaks.push_back(j == 0 ? coarse[i - 1] : cuts[j - 1]);
      pieces.push_back(la.at(x) >= lb.at(x) ? la : lb);
    }
  }
  return PiecewiseLinear(std::move(breaks), std::move(pieces));
}

std::string PiecewiseLinear::table() const {
  std::ostringstream out;
  out << "rho\tslope\tvalue\n";
  out << "-inf\t" << to_string(pieces_.front().slope) << "\t-\n";
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    out << to_string(breaks_[i]) << "\t" << to_string(pieces_[i + 1].slope) << "\t"
        << to_string(pieces_[i + 1].at(breaks_[i])) << "\n";
  return out.str();
}

}  // namespace nabc
