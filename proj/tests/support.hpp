#pragma once

#include <random>
#include <string>
#include <vector>

#include "nabc/mvpoly.hpp"
#include "nabc/poly_text.hpp"

namespace nabc::testing {

inline MvPoly P(const std::string& text, const FieldSpec& F, const std::vector<std::string>& vars = {"z"}) {
  return parse_poly(text, F, vars);
}

inline std::vector<FieldSpec> all_fields() {
  return {FieldSpec::rational_padic(2), FieldSpec::rational_padic(3), FieldSpec::rational_padic(5),
          FieldSpec::prime_field(2),    FieldSpec::prime_field(3),    FieldSpec::prime_field(5),
          FieldSpec::ratfunc_tadic(3)};
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long long range(long long lo, long long hi) { return lo + static_cast<long long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Coeff coeff(const FieldSpec& F) {
    switch (F.kind()) {
      case FieldKind::rational_padic: {
        Rational q(Integer(static_cast<long>(range(-12, 12))), Integer(static_cast<long>(range(1, 4))) * (range(0, 2) == 0 ? Integer(F.p()) : Integer(1)));
        q.canonicalize();
        return Coeff(q);
      }
      case FieldKind::prime_field: return F.from_int(range(0, F.p() - 1));
      case FieldKind::ratfunc_tadic: {
        std::vector<std::uint32_t> num, den;
        for (long long i = 0, n = range(0, 2); i <= n; ++i) num.push_back(static_cast<std::uint32_t>(range(0, F.p() - 1)));
        std::uint32_t shift = static_cast<std::uint32_t>(range(0, 2));
        den.assign(shift + 1, 0);
        den[shift] = 1;
        return F.div(Coeff(RatFunc{FpPoly(num, F.p()), FpPoly({1}, F.p())}), Coeff(RatFunc{FpPoly(den, F.p()), FpPoly({1}, F.p())}));
      }
    }
    return F.zero();
  }

  Coeff nonzero(const FieldSpec& F) {
    while (true) {
      Coeff c = coeff(F);
      if (!F.is_zero(c)) return c;
    }
  }

  Monomial mono(unsigned m, unsigned max_degree) {
    Monomial out(m);
    unsigned d = static_cast<unsigned>(range(0, max_degree));
    for (unsigned i = 0; i < d; ++i) {
      unsigned v = static_cast<unsigned>(range(0, m - 1));
      out.set(v, out[v] + 1);
    }
    return out;
  }

  MvPoly poly(const FieldSpec& F, unsigned m, unsigned max_degree, unsigned max_terms = 5) {
    std::vector<Term> terms;
    for (long long i = 0, n = range(1, max_terms); i < n; ++i) terms.push_back({mono(m, max_degree), coeff(F)});
    return MvPoly::from_terms(F, m, std::move(terms));
  }

  MvPoly nonzero_poly(const FieldSpec& F, unsigned m, unsigned max_degree, unsigned max_terms = 5) {
    while (true) {
      MvPoly f = poly(F, m, max_degree, max_terms);
      if (!f.is_zero()) return f;
    }
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace nabc::testing
