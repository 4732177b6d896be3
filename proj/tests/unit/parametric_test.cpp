#include <gtest/gtest.h>

#include "probe/checker/conditional.hpp"
#include "probe/error.hpp"
#include "probe/explorer/explorer.hpp"
#include "probe/parametric/eliminate.hpp"
#include "probe/parametric/instantiate.hpp"
#include "probe/parametric/region.hpp"
#include "support.hpp"

namespace probe::parametric {
namespace {

struct Built {
  std::shared_ptr<const frontend::Program> program;
  explorer::Explorer ex;
};

Built build(const std::string& src, uint64_t budget = 100000) {
  auto p = testing::program(src);
  explorer::ExplorationConfig cfg;
  cfg.budget = budget;
  Built b{p, explorer::Explorer(std::make_shared<semantics::Semantics>(p), cfg)};
  b.ex.expand();
  return b;
}

ParamValuation at(const frontend::Program& p, std::map<std::string, Rational> values) {
  return ParamValuation::from_names(p.parameters, values);
}

TEST(Eliminate, SingleChoice) {
  auto b = build("int x := 0; { x := 1; } [p] { x := 0; }");
  semantics::RewardFunction r(testing::bound("P >= 0 [ x = 1 ]", *b.program));
  auto res = eliminate(b.ex.model(), r);
  EXPECT_EQ(res.numerator, RationalFunction(Polynomial::variable(0)));
  EXPECT_TRUE(res.bad.is_zero());
  EXPECT_EQ(*res.value(at(*b.program, {{"p", Rational(2, 7)}})), Rational(2, 7));
}

TEST(Eliminate, GeometricLoopWithObservation) {
  // x counts successes before the first failure; keep runs with x >= 1.
  auto b = build("int x := 0; int c := 0; while (c = 0) { { x := x + 1; } [p] { c := 1; } } observe(x > 0);", 50);
  semantics::RewardFunction r(testing::bound("P >= 0 [ true ]", *b.program));
  auto res = eliminate(b.ex.model(), r);
  auto u = at(*b.program, {{"p", Rational(1, 3)}});
  auto m = instantiate(b.ex.model(), u);
  auto direct = checker::conditional_value(m, r, frontend::SchedulerMode::Min);
  ASSERT_TRUE(direct.exact());
  EXPECT_EQ(*res.value(u), *direct.value->exact);
  EXPECT_EQ(res.bad.evaluate(u), *direct.bad.exact);
}

TEST(Eliminate, RejectsNondeterminism) {
  auto b = build("int x := 0; { x := 1; } [] { { x := 2; } [p] { skip; } }");
  semantics::RewardFunction r(testing::bound("E >= 0 [ x ]", *b.program));
  EXPECT_THROW(eliminate(b.ex.model(), r), Error);
}

TEST(Eliminate, UndefinedWhereDenominatorVanishes) {
  auto b = build("int x := 0; { observe(false); } [p] { x := 1; }");
  semantics::RewardFunction r(testing::bound("E >= 0 [ x ]", *b.program));
  auto res = eliminate(b.ex.model(), r);
  EXPECT_FALSE(res.value(at(*b.program, {{"p", Rational(1)}})));
  EXPECT_EQ(*res.value(at(*b.program, {{"p", Rational(1, 2)}})), Rational(1));
}

TEST(Instantiate, ChecksWellDefinedness) {
  auto b = build("int x := 0; { x := 1; } [p] { { x := 2; } [q] { x := 3; } }");
  const auto& m = b.ex.model();
  EXPECT_NO_THROW(instantiate(m, at(*b.program, {{"p", Rational(1, 2)}, {"q", Rational(1, 3)}})));
  EXPECT_THROW(instantiate(m, at(*b.program, {{"p", Rational(3, 2)}, {"q", Rational(1, 3)}})),
               WellDefinednessViolation);
  EXPECT_THROW(instantiate(m, at(*b.program, {{"p", Rational(1, 2)}, {"q", Rational(-1)}})),
               WellDefinednessViolation);
  ParamValuation wrong(ParameterSet({"z"}), {Rational(0)});
  EXPECT_THROW(instantiate(m, wrong), Error);
}

TEST(Instantiate, KeepsStructureAndEvaluatesWeights) {
  auto b = build("int x := 0; { x := 1; } [p] { x := 2; }");
  auto m = instantiate(b.ex.model(), at(*b.program, {{"p", Rational(1, 4)}}));
  EXPECT_EQ(m.state_count(), b.ex.model().state_count());
  EXPECT_FALSE(m.weights().parametric());
  semantics::RewardFunction r(testing::bound("E >= 0 [ x ]", *b.program));
  auto v = checker::conditional_value(m, r, frontend::SchedulerMode::Min);
  EXPECT_EQ(*v.value->exact, Rational(7, 4));
}

TEST(Region, ParseGrid) {
  auto axes = parse_grid("f:0:1:50,b:0:1:40");
  ASSERT_EQ(axes.size(), 2u);
  EXPECT_EQ(axes[0].name, "f");
  EXPECT_EQ(axes[1].steps, 40u);
  EXPECT_EQ(axes[0].hi, Rational(1));
  EXPECT_THROW(parse_grid("f:0:1"), SyntaxError);
  EXPECT_THROW(parse_grid("f:a:1:3"), SyntaxError);
  EXPECT_THROW(parse_grid("f:1:0:3"), Error);
  EXPECT_THROW(parse_grid("f:0:1:0"), Error);
  EXPECT_THROW(parse_grid("f:0:1:2,f:0:1:2"), Error);
}

TEST(Region, ClassifiesCells) {
  // Value is p; cells with p > 1/2 violate the bound.
  auto p = testing::program("int x := 0; { x := 1; } [p] { x := 0; }");
  auto prop = frontend::parse_property("P <= 0.5 [ x = 1 ]");
  auto scans = region_scan(p, prop, parse_grid("p:0:1:4"));
  ASSERT_EQ(scans.size(), 1u);
  const auto& cells = scans[0].cells;
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].point[0], Rational(1, 8));
  EXPECT_EQ(cells[0].cls, CellClass::Unknown);
  EXPECT_EQ(cells[1].cls, CellClass::Unknown);
  EXPECT_EQ(cells[2].cls, CellClass::Unsafe);
  EXPECT_EQ(cells[3].cls, CellClass::Unsafe);
  EXPECT_EQ(scans[0].unsafe_count(), 2u);
  auto csv = to_csv(scans);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,iteration,value,class");
}

TEST(Region, IllDefinedCells) {
  auto p = testing::program("int x := 0; { x := 1; } [p] { x := 0; }");
  auto scans = region_scan(p, frontend::parse_property("P <= 0.5 [ x = 1 ]"), parse_grid("p:-1:1:2"));
  EXPECT_EQ(scans[0].cells[0].cls, CellClass::IllDefined);
  EXPECT_FALSE(scans[0].cells[0].note.empty());
}

TEST(Region, Preconditions) {
  auto plain = testing::program("int x := 0; { x := 1; } [0.5] { x := 0; }");
  auto para = testing::program("int x := 0; { x := 1; } [p] { x := 0; }");
  auto upper = frontend::parse_property("P <= 0.5 [ x = 1 ]");
  EXPECT_THROW(region_scan(plain, upper, parse_grid("p:0:1:2")), Error);
  EXPECT_THROW(region_scan(para, frontend::parse_property("P >= 0.5 [ x = 1 ]"), parse_grid("p:0:1:2")), Error);
  EXPECT_THROW(region_scan(para, upper, parse_grid("q:0:1:2")), Error);
}

TEST(Region, SvgNeedsTwoAxes) {
  auto p = testing::program("int x := 0; { x := 1; } [p] { { x := 2; } [q] { x := 0; } }");
  auto scans = region_scan(p, frontend::parse_property("E <= 1 [ x ]"), parse_grid("p:0:1:3,q:0:1:3"));
  auto svg = to_svg(scans[0]);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  auto one = region_scan(testing::program("int x := 0; { x := 1; } [p] { x := 0; }"),
                         frontend::parse_property("P <= 0.5 [ x = 1 ]"), parse_grid("p:0:1:2"));
  EXPECT_THROW(to_svg(one[0]), Error);
}

}  // namespace
}  // namespace probe::parametric
