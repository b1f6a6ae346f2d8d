#include <gtest/gtest.h>

#include "nabc/error.hpp"
#include "nabc/factor_oracle.hpp"
#include "support.hpp"

using namespace nabc;
using nabc::testing::P;
using nabc::testing::Rng;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::usage_error;
}

}  // namespace

TEST(MvPoly, ParseFormatAndOrder) {
  FieldSpec Q = FieldSpec::rational_padic(3);
  std::vector<std::string> xy{"x", "y"};
  MvPoly f = P("y + x^2 - 3 + 2*x*y", Q, xy);
  EXPECT_EQ(format_poly(f, xy), "x^2 + 2*x*y + y - 3");
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_EQ(f.min_degree(), 0);
  EXPECT_EQ(f.degree_in(1), 1);
  EXPECT_EQ(P(format_poly(f, xy), Q, xy), f);
  EXPECT_EQ(format_poly(MvPoly(Q, 2)), "0");
  EXPECT_THROW(P("x +", Q, xy), Error);
  EXPECT_THROW(P("(x", Q, xy), Error);
}

TEST(MvPoly, ArithmeticExamples) {
  FieldSpec F = FieldSpec::prime_field(3);
  MvPoly f = P("z + 1", F);
  EXPECT_EQ(f.pow(3), P("z^3 + 1", F));
  EXPECT_EQ(f * f - P("z^2 + 2*z + 1", F), MvPoly(F, 1));
  EXPECT_EQ(f.monic(), f);
  EXPECT_EQ(P("2*z + 1", F).monic(), P("z + 2", F));
}

TEST(MvPoly, RingMismatch) {
  MvPoly a = P("z", FieldSpec::prime_field(3));
  MvPoly b = P("z", FieldSpec::prime_field(5));
  EXPECT_EQ(code_of([&] { return a + b; }), Errc::spec_mismatch);
}

TEST(MvPoly, DivisionErrors) {
  FieldSpec Q = FieldSpec::rational_padic(2);
  EXPECT_EQ(code_of([&] { return exact_div(P("z^2 + 1", Q), P("z + 1", Q)); }), Errc::not_divisible);
  EXPECT_EQ(code_of([&] { return exact_div(P("z", Q), MvPoly(Q, 1)); }), Errc::division_by_zero_poly);
  EXPECT_EQ(code_of([&] { return gcd(MvPoly(Q, 1), MvPoly(Q, 1)); }), Errc::both_zero);
  EXPECT_EQ(code_of([&] { return lcm(MvPoly(Q, 1), P("z", Q)); }), Errc::zero_input);
  EXPECT_EQ(code_of([&] { return multiplicity(P("z", Q), P("3", Q)); }), Errc::constant_divisor);
  EXPECT_EQ(exact_div(P("z^2 - 1", Q), P("z + 1", Q)), P("z - 1", Q));
}

TEST(MvPoly, GcdExamples) {
  FieldSpec Q = FieldSpec::rational_padic(5);
  std::vector<std::string> xy{"x", "y"};
  EXPECT_EQ(gcd(P("x^2 - y^2", Q, xy), P("x^2 + 2*x*y + y^2", Q, xy)), P("x + y", Q, xy));
  EXPECT_EQ(gcd(P("x*y + x", Q, xy), P("y^2 - 1", Q, xy)), P("y + 1", Q, xy));
  EXPECT_TRUE(gcd(P("x", Q, xy), P("y", Q, xy)).is_one());
  EXPECT_EQ(gcd(P("3*x + 3", Q, xy), MvPoly(Q, 2)), P("x + 1", Q, xy));
  EXPECT_EQ(lcm(P("x", Q, xy), P("x*y", Q, xy)), P("x*y", Q, xy));
  EXPECT_EQ(multiplicity(P("x^3*y + x^3", Q, xy), P("x", Q, xy)), 3u);
}

TEST(MvPolyProperty, RingAxioms) {
  Rng rng(21);
  for (const auto& F : nabc::testing::all_fields())
    for (int i = 0; i < 60; ++i) {
      unsigned m = static_cast<unsigned>(rng.range(1, 3));
      MvPoly f = rng.poly(F, m, 4), g = rng.poly(F, m, 4), h = rng.poly(F, m, 4);
      EXPECT_EQ((f + g) * h, f * h + g * h);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * g, g * f);
      if (!g.is_zero()) EXPECT_EQ(exact_div(f * g, g), f);
    }
}

TEST(MvPolyProperty, GcdOfConstructedProducts) {
  Rng rng(22);
  for (const auto& F : nabc::testing::all_fields())
    for (int i = 0; i < 25; ++i) {
      unsigned m = static_cast<unsigned>(rng.range(1, 2));
      MvPoly common = rng.nonzero_poly(F, m, 2, 3);
      MvPoly a = rng.nonzero_poly(F, m, 2, 3), b = rng.nonzero_poly(F, m, 2, 3);
      MvPoly g = gcd(common * a, common * b);
      EXPECT_TRUE(divides(common, g)) << format_poly(common) << " | " << format_poly(g);
      EXPECT_TRUE(divides(g, common * a));
      EXPECT_TRUE(divides(g, common * b));
      EXPECT_TRUE(gcd(exact_div(common * a, g), exact_div(common * b, g)).is_one());
      EXPECT_EQ(g.lead().coeff, F.one());
    }
}

TEST(FactorOracle, FiniteFieldCatalogue) {
  FieldSpec F = FieldSpec::prime_field(2);
  const auto& irr = prime_field_irreducibles(F, 1, 3);
  std::vector<std::string> names;
  for (const auto& f : irr) names.push_back(format_poly(f));
  EXPECT_EQ(names, (std::vector<std::string>{"z1", "z1 + 1", "z1^2 + z1 + 1", "z1^3 + z1 + 1", "z1^3 + z1^2 + 1"}));
}

TEST(FactorOracle, Factorizations) {
  FieldSpec F = FieldSpec::prime_field(3);
  auto fac = squarefree_factor_oracle(P("z^5 + z^4 + z^3 + z^2", F));
  ASSERT_EQ(fac.size(), 3u);
  EXPECT_EQ(format_poly(fac[0].poly), "z1");
  EXPECT_EQ(fac[0].multiplicity, 2u);
  EXPECT_EQ(format_poly(fac[1].poly), "z1 + 1");
  EXPECT_EQ(format_poly(fac[2].poly), "z1^2 + 1");
  EXPECT_EQ(squarefree_factor_oracle(P("z^4 + 2*z^3 + 2*z + 1", F)).front().multiplicity, 4u);
  FieldSpec Q = FieldSpec::rational_padic(2);
  auto facq = squarefree_factor_oracle(P("z^3 - z", Q));
  EXPECT_EQ(facq.size(), 3u);
  EXPECT_THROW(squarefree_factor_oracle(MvPoly(Q, 1)), Error);
  OracleOptions tight;
  tight.degree_cap = 2;
  EXPECT_THROW(squarefree_factor_oracle(P("z^3 + 1", Q), tight), Error);
}

TEST(FactorOracleProperty, ProductsRoundTrip) {
  Rng rng(23);
  FieldSpec F = FieldSpec::prime_field(3);
  const auto& irr = prime_field_irreducibles(F, 2, 2);
  for (int i = 0; i < 40; ++i) {
    MvPoly f = MvPoly::one(F, 2);
    for (int j = 0; j < 3; ++j) f *= irr[static_cast<std::size_t>(rng.range(0, irr.size() - 1))];
    MvPoly back = MvPoly::one(F, 2);
    for (const auto& [Pf, e] : squarefree_factor_oracle(f)) back *= Pf.pow(e);
    EXPECT_EQ(back, f.monic());
  }
}
