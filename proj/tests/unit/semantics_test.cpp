#include <gtest/gtest.h>

#include "probe/error.hpp"
#include "probe/semantics/eval.hpp"
#include "probe/semantics/reward.hpp"
#include "probe/semantics/semantics.hpp"
#include "support.hpp"

namespace probe::semantics {
namespace {

using parametric::Rational;

struct Fixture {
  explicit Fixture(std::string_view src) : program(testing::program(src)), sem(program) {}
  std::shared_ptr<const frontend::Program> program;
  Semantics sem;

  /// Follows deterministic single-successor steps until a branching point.
  Configuration run_until_branch(Configuration c) const {
    while (c.kind == ConfigKind::Run) {
      auto r = sem.step(c);
      if (r.size() != 1 || r[0].successors.size() != 1) break;
      c = r[0].successors[0].target;
    }
    return c;
  }
};

TEST(Eval, Arithmetic) {
  auto p = testing::program("int x := 3; int y := 4; skip;");
  auto e = frontend::parse_property("E >= 0 [ x * y - x + 2 ]");
  auto b = frontend::bind(e, *p);
  Valuation sigma = initial_valuation(*p);
  EXPECT_EQ(eval(*b.objective, sigma), 11);
}

TEST(Eval, OverflowIsAnError) {
  auto p = testing::program("int x := 9223372036854775807; skip;");
  auto b = frontend::bind(frontend::parse_property("E >= 0 [ x + 1 ]"), *p);
  EXPECT_THROW(eval(*b.objective, initial_valuation(*p)), ModelError);
}

TEST(Semantics, ProbabilisticChoiceSplitsMass) {
  Fixture f("int x := 0; { x := 1; } [1/3] { x := 2; }");
  auto r = f.sem.step(f.sem.initial());
  ASSERT_EQ(r.size(), 1u);
  ASSERT_EQ(r[0].successors.size(), 2u);
  EXPECT_EQ(f.sem.weights().exact(r[0].successors[0].weight), Rational(1, 3));
  EXPECT_EQ(f.sem.weights().exact(r[0].successors[1].weight), Rational(2, 3));
}

TEST(Semantics, UniformHasOneSuccessorPerValue) {
  Fixture f("int x := 0; x := unif(0,4);");
  auto r = f.sem.step(f.sem.initial());
  ASSERT_EQ(r.size(), 1u);
  ASSERT_EQ(r[0].successors.size(), 5u);
  for (const auto& s : r[0].successors) {
    EXPECT_EQ(f.sem.weights().exact(s.weight), Rational(1, 5));
    EXPECT_EQ(s.target.kind, ConfigKind::Term);
  }
}

TEST(Semantics, EmptyUniformRangeIsAnError) {
  Fixture f("int x := 0; x := unif(3,1);");
  EXPECT_THROW(f.sem.step(f.sem.initial()), ModelError);
}

TEST(Semantics, FailedObservationGoesBad) {
  Fixture f("int x := 0; observe(x = 1); x := 2;");
  auto c = f.run_until_branch(f.sem.initial());
  EXPECT_EQ(c.kind, ConfigKind::Bad);
}

TEST(Semantics, PassedObservationContinues) {
  Fixture f("int x := 1; observe(x = 1); x := 2;");
  auto c = f.run_until_branch(f.sem.initial());
  ASSERT_EQ(c.kind, ConfigKind::Term);
  EXPECT_EQ(c.valuation, Valuation{2});
}

TEST(Semantics, NondeterminismOffersLeftAndRight) {
  Fixture f("int x := 0; { x := 1; } [] { x := 2; }");
  auto r = f.sem.step(f.sem.initial());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].action, Action::Left);
  EXPECT_EQ(r[1].action, Action::Right);
}

TEST(Semantics, AbortLoopsForever) {
  Fixture f("int x := 0; abort;");
  auto c = f.sem.initial();
  auto r = f.sem.step(c);
  ASSERT_EQ(r.size(), 1u);
  ASSERT_EQ(r[0].successors.size(), 1u);
  EXPECT_EQ(r[0].successors[0].target, c);
}

TEST(Semantics, WhileUnrolls) {
  Fixture f("int x := 0; while (x < 3) { x := x + 1; }");
  auto c = f.run_until_branch(f.sem.initial());
  ASSERT_EQ(c.kind, ConfigKind::Term);
  EXPECT_EQ(c.valuation, Valuation{3});
}

TEST(Configuration, EncodingIsCanonical) {
  auto a = Configuration::run({1, 2}, {3, -4});
  auto b = Configuration::run({1, 2}, {3, -4});
  auto c = Configuration::run({1, 2}, {3, 4});
  EXPECT_EQ(encode(a), encode(b));
  EXPECT_NE(encode(a), encode(c));
  EXPECT_EQ(decode(encode(a)), a);
  EXPECT_EQ(decode(encode(Configuration::term({7}))), Configuration::term({7}));
  EXPECT_EQ(decode_kind(encode(Configuration::bad())), ConfigKind::Bad);
}

TEST(Reward, IndicatorAndExpectation) {
  auto p = testing::program("int x := 0; skip;");
  RewardFunction ind(testing::bound("P >= 0 [ x > 2 ]", *p));
  RewardFunction ex(testing::bound("E >= 0 [ x + 1 ]", *p));
  EXPECT_EQ(ind(Configuration::term({3})), Rational(1));
  EXPECT_EQ(ind(Configuration::term({2})), Rational(0));
  EXPECT_EQ(ex(Configuration::term({3})), Rational(4));
  EXPECT_EQ(ex(Configuration::bad()), Rational(0));
  EXPECT_EQ(ex(Configuration::run({0}, {3})), Rational(0));
  EXPECT_THROW(ex.at({-5}), ModelError);
}

}  // namespace
}  // namespace probe::semantics
