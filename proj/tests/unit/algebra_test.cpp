#include <gtest/gtest.h>

#include "probe/error.hpp"
#include "probe/parametric/polynomial.hpp"
#include "probe/parametric/rational_function.hpp"
#include "probe/parametric/weight_table.hpp"

namespace probe::parametric {
namespace {

Polynomial P(uint32_t i) { return Polynomial::variable(i); }

TEST(ParseRational, DecimalsAreExact) {
  EXPECT_EQ(*parse_rational("0.091"), Rational(91, 1000));
  EXPECT_EQ(*parse_rational("0.8"), Rational(4, 5));
  EXPECT_EQ(*parse_rational("1/100"), Rational(1, 100));
  EXPECT_EQ(*parse_rational("-7/2"), Rational(-7, 2));
  EXPECT_EQ(*parse_rational("3.4e-3"), Rational(17, 5000));
  EXPECT_EQ(*parse_rational("007"), Rational(7));
  EXPECT_EQ(*parse_rational(".5"), Rational(1, 2));
}

TEST(ParseRational, RejectsGarbage) {
  EXPECT_FALSE(parse_rational(""));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("1.2.3"));
  EXPECT_FALSE(parse_rational("0x10"));
}

TEST(Polynomial, ArithmeticAndCanonicalForm) {
  Polynomial f = P(0);
  Polynomial b = P(1);
  Polynomial e = (f + b) * (f - b);
  EXPECT_EQ(e, f * f - b * b);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(e.total_degree(), 2u);
  EXPECT_EQ((f * f * b).degree_in(0), 2u);
  EXPECT_EQ(Polynomial(Rational(3, 2)).constant_value(), Rational(3, 2));
  EXPECT_THROW(f.constant_value(), Error);
  ParameterSet names({"f", "b"});
  EXPECT_EQ((Polynomial(1) - f).str(names), "1 - f");
}

TEST(Polynomial, Evaluate) {
  Polynomial g = P(0) * P(1) + Polynomial(Rational(1, 2));
  std::vector<Rational> at{Rational(1, 3), Rational(3, 4)};
  EXPECT_EQ(g.evaluate(at), Rational(3, 4));
}

TEST(Polynomial, GcdAndExactDivision) {
  Polynomial x = P(0);
  Polynomial y = P(1);
  Polynomial a = (x + 1) * (x - y);
  Polynomial b = (x + 1) * (y + 2);
  EXPECT_EQ(gcd(a, b), monic(x + 1));
  EXPECT_EQ(divide_exact(a, x + 1), x - y);
  EXPECT_THROW(divide_exact(a, y + 2), Error);
  EXPECT_TRUE(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST(RationalFunction, ReducesAndComparesSemantically) {
  Polynomial x = P(0);
  RationalFunction r((x * x - 1), (x - 1));
  EXPECT_EQ(r, RationalFunction(x + 1));
  EXPECT_TRUE(r.denominator().is_constant());
  RationalFunction h(Polynomial(1), Polynomial(1) - x);
  EXPECT_EQ(h * (RationalFunction(1) - RationalFunction(x)), RationalFunction(1));
  EXPECT_THROW(RationalFunction(x, Polynomial()), DivisionByZero);
  EXPECT_THROW(RationalFunction(1) / RationalFunction(), DivisionByZero);
}

TEST(RationalFunction, PoleIsIllDefined) {
  Polynomial x = P(0);
  RationalFunction h(Polynomial(1), Polynomial(1) - x);
  std::vector<Rational> good{Rational(1, 2)};
  std::vector<Rational> pole{Rational(1)};
  EXPECT_EQ(h.evaluate(good), Rational(2));
  EXPECT_THROW(h.evaluate(pole), IllDefinedPoint);
}

TEST(WeightTable, InternsAndEvaluates) {
  WeightTable t(ParameterSet({"p"}));
  EXPECT_EQ(t.intern(RationalFunction(1)), WeightTable::kOne);
  WeightId half = t.intern(RationalFunction(Rational(1, 2)));
  EXPECT_EQ(t.intern(RationalFunction(Rational(2, 4))), half);
  WeightId p = t.intern(RationalFunction(P(0)));
  WeightId q = t.intern(RationalFunction(Polynomial(1) - P(0)));
  EXPECT_TRUE(t.parametric());
  EXPECT_FALSE(t.is_constant(p));
  EXPECT_THROW(t.exact(p), Error);
  auto u = ParamValuation::from_names(t.parameters(), {{"p", Rational(1, 5)}});
  WeightTable e = t.evaluated(u);
  EXPECT_FALSE(e.parametric());
  EXPECT_EQ(e.exact(p), Rational(1, 5));
  EXPECT_EQ(e.exact(q), Rational(4, 5));
  EXPECT_EQ(e.exact(half), Rational(1, 2));
  EXPECT_DOUBLE_EQ(e.approx(q), 0.8);
}

TEST(ParamValuation, RequiresEveryParameter) {
  ParameterSet ps({"f", "b"});
  EXPECT_THROW(ParamValuation::from_names(ps, {{"f", Rational(1)}}), Error);
}

TEST(ParamValuation, CanonicalizesValues) {
  ParamValuation u(ParameterSet({"p"}), {Rational(20, 100)});
  EXPECT_EQ(u.at(0), Rational(1, 5));
  Polynomial twice = P(0) + P(0);
  EXPECT_EQ(twice.evaluate(u), Rational(2, 5));
}

}  // namespace
}  // namespace probe::parametric
