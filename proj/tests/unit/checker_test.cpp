#include <gtest/gtest.h>

#include <json.hpp>

#include "probe/checker/bmc.hpp"
#include "probe/checker/conditional.hpp"
#include "probe/checker/decide.hpp"
#include "probe/checker/report.hpp"
#include "probe/checker/simulate.hpp"
#include "probe/checker/solver.hpp"
#include "probe/error.hpp"
#include "probe/explorer/explorer.hpp"
#include "support.hpp"

namespace probe::checker {
namespace {

using frontend::Comparison;
using parametric::Rational;

struct Built {
  std::shared_ptr<const frontend::Program> program;
  explorer::Explorer ex;
};

Built build(const std::string& src, uint64_t budget = 100000) {
  auto p = testing::program(src);
  explorer::ExplorationConfig cfg;
  cfg.budget = budget;
  return {p, explorer::Explorer(std::make_shared<semantics::Semantics>(p), cfg)};
}

ConditionalResult value_of(Built& b, const std::string& prop) {
  b.ex.expand();
  return conditional_value(b.ex.model(), testing::bound(prop, *b.program));
}

TEST(Conditional, DeterministicExact) {
  auto b = build("int x := 0; { x := 1; } [1/3] { x := 4; }");
  auto r = value_of(b, "E >= 0 [ x ]");
  ASSERT_TRUE(r.exact());
  EXPECT_EQ(*r.value->exact, Rational(3));
}

TEST(Conditional, ObservationRescales) {
  auto b = build("int x := 0; x := unif(1,6); observe(x > 3);");
  auto r = value_of(b, "P >= 0 [ x = 6 ]");
  EXPECT_EQ(*r.value->exact, Rational(1, 3));
  EXPECT_EQ(*r.bad.exact, Rational(1, 2));
  EXPECT_EQ(*r.denominator.exact, Rational(1, 2));
}

TEST(Conditional, CertainViolationIsUndefined) {
  auto b = build("int x := 0; observe(x = 1);");
  auto r = value_of(b, "P >= 0.5 [ true ]");
  EXPECT_FALSE(r.defined());
  EXPECT_EQ(decide(testing::bound("P >= 0.5 [ true ]", *b.program), r, true), Outcome::Undefined);
}

TEST(Conditional, CyclicChainExact) {
  // Retry until the coin agrees: x is uniform on {1, 2} after conditioning.
  auto b = build("int x := 0; int d := 0; while (d = 0) { x := unif(1,3); if (x < 3) { d := 1; } }");
  auto r = value_of(b, "E >= 0 [ x ]");
  EXPECT_EQ(*r.value->exact, Rational(3, 2));
}

TEST(Conditional, ExactAndFloatAgree) {
  auto b = build(testing::read_corpus("coupon-obs-5.pgcl"), 20000);
  b.ex.expand();
  auto prop = testing::bound("E >= 0 [ numberDraws ]", *b.program);
  CheckerOptions exact;
  CheckerOptions approx;
  approx.exact_threshold = 0;
  auto a = conditional_value(b.ex.model(), prop, exact);
  auto c = conditional_value(b.ex.model(), prop, approx);
  ASSERT_TRUE(a.exact());
  EXPECT_FALSE(c.exact());
  EXPECT_NEAR(a.value->approx, c.value->approx, 1e-9);
}

TEST(Conditional, NondetMinMaxWithoutObservation) {
  auto b = build("int x := 0; { x := 1; } [] { x := unif(2,4); }");
  auto p_min = testing::bound("min E >= 0 [ x ]", *b.program);
  auto p_max = testing::bound("max E >= 0 [ x ]", *b.program);
  b.ex.expand();
  EXPECT_EQ(*conditional_value(b.ex.model(), p_min).value->exact, Rational(1));
  EXPECT_EQ(*conditional_value(b.ex.model(), p_max).value->exact, Rational(3));
}

TEST(Conditional, NondetQuotientEnumeratesSchedulers) {
  // Left: x in {1,2,3} with 3 rejected -> 3/2. Right: x = 2 certainly.
  auto b = build("int x := 0; { x := unif(1,3); observe(x < 3); } [] { x := 2; }");
  b.ex.expand();
  auto r_min = conditional_value(b.ex.model(), testing::bound("min E >= 0 [ x ]", *b.program));
  auto r_max = conditional_value(b.ex.model(), testing::bound("max E >= 0 [ x ]", *b.program));
  EXPECT_EQ(*r_min.value->exact, Rational(3, 2));
  EXPECT_EQ(*r_max.value->exact, Rational(2));
  EXPECT_EQ(r_min.schedulers, 2u);
  ASSERT_TRUE(r_min.scheduler);
}

TEST(Conditional, UndefinedIsLeastInBothModes) {
  auto b = build("int x := 0; { observe(false); } [] { x := 2; }");
  b.ex.expand();
  EXPECT_FALSE(conditional_value(b.ex.model(), testing::bound("min E >= 0 [ x ]", *b.program)).defined());
  EXPECT_EQ(*conditional_value(b.ex.model(), testing::bound("max E >= 0 [ x ]", *b.program)).value->exact,
            Rational(2));
}

TEST(Conditional, SchedulerCap) {
  auto b = build("int x := 0; { x := 1; } [] { x := 2; } { x := x; } [] { skip; } observe(x < 2);");
  b.ex.expand();
  CheckerOptions o;
  o.scheduler_cap = 1;
  EXPECT_THROW(conditional_value(b.ex.model(), testing::bound("E >= 0 [ x ]", *b.program), o), SchedulerExplosion);
}

TEST(Conditional, ReachProbability) {
  auto b = build("int x := 0; x := unif(1,4);");
  b.ex.expand();
  const auto& m = b.ex.model();
  std::vector<model::StateId> two{m.term_states()[0], m.term_states()[1]};
  auto q = reach_probability(m, two, Optimize::None);
  EXPECT_EQ(*q.exact, Rational(1, 2));
  std::vector<model::StateId> bogus{static_cast<model::StateId>(m.state_count())};
  EXPECT_THROW(reach_probability(m, bogus, Optimize::None), Error);
}

TEST(Decide, ImplicationRules) {
  auto p = testing::program("int x; skip;");
  auto at = [](Rational v) {
    ConditionalResult r;
    r.value = Quantity::of(v);
    return r;
  };
  ConditionalResult undef;
  auto ge = testing::bound("P >= 0.5 [ true ]", *p);
  auto gt = testing::bound("P > 0.5 [ true ]", *p);
  auto le = testing::bound("P <= 0.5 [ true ]", *p);
  auto lt = testing::bound("P < 0.5 [ true ]", *p);
  Rational half(1, 2);
  Rational low(1, 4);
  Rational high(3, 4);
  EXPECT_EQ(decide(ge, at(half), false), Outcome::Proven);
  EXPECT_EQ(decide(ge, at(low), false), Outcome::Unknown);
  EXPECT_EQ(decide(ge, at(low), true), Outcome::Refuted);
  EXPECT_EQ(decide(gt, at(half), false), Outcome::Unknown);
  EXPECT_EQ(decide(gt, at(high), false), Outcome::Proven);
  EXPECT_EQ(decide(le, at(half), false), Outcome::Unknown);
  EXPECT_EQ(decide(le, at(high), false), Outcome::Refuted);
  EXPECT_EQ(decide(le, at(half), true), Outcome::Proven);
  EXPECT_EQ(decide(lt, at(half), false), Outcome::Refuted);
  EXPECT_EQ(decide(lt, at(low), true), Outcome::Proven);
  EXPECT_EQ(decide(ge, undef, false), Outcome::Unknown);
  EXPECT_EQ(decide(ge, undef, true), Outcome::Undefined);
  EXPECT_TRUE(satisfies(Quantity::of(0.5), Comparison::GreaterEqual, half));
  EXPECT_FALSE(satisfies(Quantity::of(0.49999999999999994), Comparison::GreaterEqual, half));
}

TEST(Solver, LeastFixpointIgnoresTraps) {
  auto b = build("int x := 0; { x := 1; } [0.5] { abort; }");
  auto r = value_of(b, "P >= 0 [ true ]");
  EXPECT_EQ(*r.value->exact, Rational(1, 2));
}

TEST(Solver, ValueIterationIteratesAreLowerBounds) {
  auto b = build("int x := 0; int c := 0; while (c = 0) { { x := x + 1; } [0.9] { c := 1; } }", 200);
  b.ex.expand();
  auto& m = b.ex.model();
  auto sys = snapshot(m, weight_values<double>(m));
  Targets<double> t;
  for (auto s : m.term_states()) t.emplace_back(s, 1.0);
  auto exact = solve_reachability(sys, t, Optimize::None);
  bool sound = true;
  value_iteration(sys, t, Optimize::None, 1e-12, 100000, [&](uint64_t, const std::vector<double>& x) {
    for (size_t i = 0; i < x.size(); ++i) sound = sound && x[i] <= exact[i] + 1e-12;
  });
  EXPECT_TRUE(sound);
}

TEST(Bmc, StopsAtVerdict) {
  auto p = testing::program("int x := 0; int c := 0; while (c = 0) { { x := x + 1; } [0.5] { c := 1; } }");
  BmcOptions o;
  o.exploration.budget = 3;
  auto report = bmc(p, frontend::parse_property("P >= 0.7 [ true ]"), o);
  EXPECT_EQ(report.verdict, Outcome::Proven);
  EXPECT_EQ(report.stop_reason, "verdict");
  EXPECT_EQ(report.decided_round, report.iterations.back().round);
  EXPECT_GE(report.iterations.back().value->approx, 0.7);
}

TEST(Bmc, RefutesUpperBound) {
  auto p = testing::program("int x := 0; int c := 0; while (c = 0) { { x := x + 1; } [0.5] { c := 1; } }");
  BmcOptions o;
  o.exploration.budget = 3;
  auto report = bmc(p, frontend::parse_property("P < 0.6 [ true ]"), o);
  EXPECT_EQ(report.verdict, Outcome::Refuted);
}

TEST(Bmc, MaxRoundsLeavesUnknown) {
  auto p = testing::program("int x := 0; int c := 0; while (c = 0) { { x := x + 1; } [0.5] { c := 1; } }");
  BmcOptions o;
  o.exploration.budget = 3;
  o.exploration.max_rounds = 2;
  auto report = bmc(p, frontend::parse_property("P >= 0.9999 [ true ]"), o);
  EXPECT_EQ(report.verdict, Outcome::Unknown);
  EXPECT_EQ(report.iterations.size(), 2u);
  EXPECT_EQ(report.stop_reason, "max-rounds");
}

TEST(Bmc, RejectsParametricPrograms) {
  auto p = testing::program("int x := 0; { x := 1; } [p] { skip; }");
  EXPECT_THROW(bmc(p, frontend::parse_property("P >= 0.5 [ true ]")), Error);
}

TEST(Report, JsonShape) {
  auto p = testing::program("int x := 0; { x := 1; } [0.5] { x := 2; }");
  auto report = bmc(p, frontend::parse_property("E >= 1 [ x ]"));
  auto j = nlohmann::json::parse(to_json(report, false));
  EXPECT_EQ(j["verdict"], "proven");
  EXPECT_EQ(j["wallClockSeconds"], 0.0);
  ASSERT_EQ(j["iterations"].size(), 1u);
  EXPECT_EQ(j["iterations"][0]["value"], 1.5);
  EXPECT_EQ(j["iterations"][0]["exactValue"], "3/2");
  EXPECT_EQ(to_csv(report).substr(0, 46), "round,states,transitions,numerator,denominator");
}

TEST(Report, Formatting) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_significant(0.8287, 2), "0.83");
  EXPECT_EQ(format_significant(0.0038123, 2), "0.0038");
}

TEST(Simulate, IndependentOfThreadCount) {
  auto p = testing::program("int x := 0; x := unif(1,6); observe(x > 2);");
  auto prop = frontend::parse_property("E >= 0 [ x ]");
  SimulationOptions a;
  a.runs = 20000;
  a.seed = 7;
  a.threads = 1;
  SimulationOptions b = a;
  b.threads = 3;
  auto ra = simulate(*p, prop, a);
  auto rb = simulate(*p, prop, b);
  EXPECT_EQ(*ra.mean, *rb.mean);
  EXPECT_EQ(ra.bad, rb.bad);
  EXPECT_TRUE(ra.covers(4.5));
  EXPECT_NEAR(double(ra.bad) / ra.runs, 1.0 / 3, 0.02);
}

TEST(Simulate, DivergedRunsEarnNothing) {
  auto p = testing::program("int x := 0; { x := 1; } [0.5] { abort; }");
  SimulationOptions o;
  o.runs = 4000;
  o.max_steps = 50;
  auto r = simulate(*p, frontend::parse_property("P >= 0 [ true ]"), o);
  EXPECT_GT(r.diverged, 0u);
  EXPECT_TRUE(r.covers(0.5));
}

TEST(Simulate, RejectsNondeterminism) {
  auto p = testing::program("int x := 0; { x := 1; } [] { x := 2; }");
  EXPECT_THROW(simulate(*p, frontend::parse_property("P >= 0 [ true ]")), Error);
}

}  // namespace
}  // namespace probe::checker
