#include <gtest/gtest.h>

#include "probe/error.hpp"
#include "probe/frontend/parser.hpp"
#include "probe/frontend/printer.hpp"
#include "probe/frontend/property.hpp"
#include "support.hpp"

namespace probe::frontend {
namespace {

using parametric::Rational;

TEST(Parser, MinimalProgram) {
  auto p = parse_program("int x := 0; x := x + 1;");
  ASSERT_EQ(p.variable_count(), 1u);
  EXPECT_EQ(p.body->kind, Stmt::Kind::Assign);
  EXPECT_FALSE(p.parametric());
}

TEST(Parser, CouponHasNineVariables) {
  auto p = parse_program(testing::read_corpus("coupon-5.pgcl"));
  EXPECT_EQ(p.variable_count(), 9u);
}

TEST(Parser, ProbabilityLiteralIsExact) {
  auto p = parse_program("int x := 0; { x := 1; } [0.091] { skip; }");
  ASSERT_EQ(p.body->kind, Stmt::Kind::Prob);
  EXPECT_EQ(p.body->weight.constant_value(), Rational(91, 1000));
}

TEST(Parser, UndeclaredVariable) {
  try {
    parse_program("int x := 0; y := 1;");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("undeclared variable y"), std::string::npos);
  }
}

TEST(Parser, DuplicateDeclaration) {
  EXPECT_THROW(parse_program("int x := 0; int x := 1; skip;"), ValidationError);
}

TEST(Parser, ProbabilityOutOfRange) {
  EXPECT_THROW(parse_program("int x; {skip;}[1.5]{skip;}"), ValidationError);
}

TEST(Parser, SyntaxErrorHasLocation) {
  try {
    parse_program("int x := 0;\nx := ;");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.location().line, 2u);
  }
}

TEST(Parser, MixedAndOrNeedsParentheses) {
  EXPECT_THROW(parse_program("int x; if (x = 0 & x = 1 | x = 2) { skip; }"), SyntaxError);
  EXPECT_NO_THROW(parse_program("int x; if ((x = 0 & x = 1) | x = 2) { skip; }"));
  EXPECT_NO_THROW(parse_program("int x; if (!(x = 0) | !(x = 1) | x = 2) { skip; }"));
}

TEST(Parser, ParametersAreCollected) {
  auto p = parse_program(testing::read_corpus("parametric/crowds-param-100-60.pgcl"));
  EXPECT_TRUE(p.parametric());
  EXPECT_EQ(p.parameters.names(), (std::vector<std::string>{"b", "f"}));
}

TEST(Parser, DefaultInitialValueIsZero) {
  auto p = parse_program("int x; skip;");
  EXPECT_EQ(p.declarations[0].initial, 0);
}

class RoundTrip : public ::testing::TestWithParam<const char*> {};

TEST_P(RoundTrip, PrintThenParseIsIdentity) {
  auto p = parse_program(testing::read_corpus(GetParam()));
  auto again = parse_program(print(p));
  EXPECT_TRUE(equal(p, again)) << print(p);
  EXPECT_EQ(print(again), print(p));
}

INSTANTIATE_TEST_SUITE_P(Corpus, RoundTrip,
                         ::testing::Values("example1.pgcl", "coupon-5.pgcl", "coupon-obs-5.pgcl",
                                           "coupon-classic-5.pgcl", "crowds-100-60.pgcl", "crowds-obs-100-60.pgcl",
                                           "parametric/crowds-param-100-60.pgcl"));

TEST(Property, TerminationProbability) {
  auto p = parse_property("P >= 0.5 [ true ]");
  EXPECT_EQ(p.kind, QueryKind::Probability);
  EXPECT_EQ(p.comparison, Comparison::GreaterEqual);
  EXPECT_EQ(p.threshold, Rational(1, 2));
  EXPECT_EQ(p.mode, SchedulerMode::Min);
}

TEST(Property, Expectation) {
  auto p = parse_property("E >= 1.6 [ x ]");
  EXPECT_EQ(p.kind, QueryKind::Expectation);
  EXPECT_EQ(p.threshold, Rational(8, 5));
}

TEST(Property, DefaultModeFollowsComparison) {
  EXPECT_EQ(parse_property("P <= 0.5 [ true ]").mode, SchedulerMode::Max);
  EXPECT_EQ(parse_property("P < 0.5 [ true ]").mode, SchedulerMode::Max);
  EXPECT_EQ(parse_property("P > 0.5 [ true ]").mode, SchedulerMode::Min);
  EXPECT_EQ(parse_property("max P >= 0.5 [ true ]").mode, SchedulerMode::Max);
}

TEST(Property, CanonicalTextRoundTrips) {
  for (const char* text : {"P >= 0.29 [ observeSender > 6 ]", "E >= 1.6 [ x ]", "max P < 1/3 [ !(x = 1) ]"}) {
    auto p = parse_property(text);
    auto q = parse_property(p.str());
    EXPECT_EQ(p.str(), q.str());
    EXPECT_EQ(p.threshold, q.threshold);
    EXPECT_EQ(p.mode, q.mode);
  }
}

TEST(Property, Errors) {
  EXPECT_THROW(parse_property("P => 0.5 [ true ]"), SyntaxError);
  EXPECT_THROW(parse_property("E >= -1 [ x ]"), SyntaxError);
  EXPECT_THROW(parse_property("P >= 1.5 [ true ]"), SyntaxError);
  EXPECT_THROW(parse_property("P >= 0.5 true"), SyntaxError);
}

TEST(Property, FileSkipsBlankLinesAndComments) {
  auto props = parse_property_file("// header\nP >= 0.5 [ true ]\n\nE >= 1 [ x ] // trailing\n");
  EXPECT_EQ(props.size(), 2u);
}

TEST(Property, BindRejectsUnknownVariables) {
  auto prog = parse_program("int x; skip;");
  EXPECT_NO_THROW(bind(parse_property("E >= 1 [ x ]"), prog));
  EXPECT_THROW(bind(parse_property("E >= 1 [ y ]"), prog), ValidationError);
}

}  // namespace
}  // namespace probe::frontend
