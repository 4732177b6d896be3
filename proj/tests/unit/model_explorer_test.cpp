#include <gtest/gtest.h>

#include "probe/error.hpp"
#include "probe/explorer/explorer.hpp"
#include "probe/model/dump.hpp"
#include "probe/model/scheduler.hpp"
#include "support.hpp"

namespace probe {
namespace {

using model::PartialModel;
using model::StateClass;

explorer::Explorer make(const std::string& src, uint64_t budget,
                        explorer::Heuristic h = explorer::Heuristic::Bfs) {
  auto sem = std::make_shared<semantics::Semantics>(testing::program(src));
  explorer::ExplorationConfig cfg;
  cfg.budget = budget;
  cfg.heuristic = h;
  return explorer::Explorer(sem, cfg);
}

const char* kGeometric = "int x := 0; int c := 0; while (c = 0) { { x := x + 1; } [0.5] { c := 1; } }";

TEST(PartialModel, InitialAndSink) {
  auto ex = make("int x; skip;", 10);
  const auto& m = ex.model();
  EXPECT_EQ(m.state_class(PartialModel::kInitial), StateClass::Expandable);
  EXPECT_EQ(m.state_class(PartialModel::kSink), StateClass::Sink);
  EXPECT_EQ(m.expandable_count(), 1u);
}

TEST(PartialModel, InternDeduplicates) {
  auto ex = make("int x; skip;", 10);
  auto& m = ex.model();
  auto c = semantics::Configuration::run({0}, {5});
  auto [a, fresh] = m.intern(c);
  auto [b, again] = m.intern(c);
  EXPECT_TRUE(fresh);
  EXPECT_FALSE(again);
  EXPECT_EQ(a, b);
  EXPECT_EQ(*m.find(c), a);
}

TEST(PartialModel, MaterializeTwiceThrows) {
  auto ex = make("int x; skip;", 10);
  ex.expand();
  auto& m = ex.model();
  EXPECT_THROW(m.materialize(PartialModel::kInitial, {}), ModelError);
}

TEST(PartialModel, TermAndBadGoToSink) {
  auto ex = make("int x := 0; { x := 1; } [0.5] { observe(false); }", 100);
  ex.expand();
  const auto& m = ex.model();
  ASSERT_TRUE(m.fully_expanded());
  ASSERT_TRUE(m.bad_state());
  for (auto s : m.term_states()) {
    auto ch = m.choices(s);
    ASSERT_EQ(ch.size(), 1u);
    auto es = m.entries(ch[0]);
    ASSERT_EQ(es.size(), 1u);
    EXPECT_EQ(es[0].target, PartialModel::kSink);
  }
  EXPECT_TRUE(model::audit(m).empty());
}

TEST(Explorer, BudgetBoundsMaterializations) {
  auto ex = make(kGeometric, 7);
  auto r = ex.expand();
  EXPECT_EQ(r.expanded, 7u);
  EXPECT_FALSE(r.fully_expanded);
  EXPECT_EQ(r.frontier, ex.model().expandable_count());
  EXPECT_TRUE(model::audit(ex.model()).empty());
}

TEST(Explorer, FiniteProgramFullyExpands) {
  auto ex = make("int x := 0; x := unif(0,9); if (x > 4) { x := 0; }", 1000);
  auto r = ex.expand();
  EXPECT_TRUE(r.fully_expanded);
  EXPECT_EQ(r.frontier, 0u);
  EXPECT_EQ(ex.model().term_states().size(), 5u);
}

TEST(Explorer, DeterministicAcrossRuns) {
  for (auto h : {explorer::Heuristic::Bfs, explorer::Heuristic::MaxProbFirst}) {
    auto a = make(kGeometric, 13, h);
    auto b = make(kGeometric, 13, h);
    for (int i = 0; i < 3; ++i) {
      a.expand();
      b.expand();
    }
    EXPECT_EQ(model::dump(a.model()), model::dump(b.model()));
  }
}

TEST(Explorer, MaxProbPrefersLikelyStates) {
  // The left branch holds 99% of the mass; a tiny budget should go there first.
  const char* src = "int x := 0; { while (x < 50) { x := x + 1; } } [0.99] { while (x > -50) { x := x - 1; } }";
  auto ex = make(src, 40, explorer::Heuristic::MaxProbFirst);
  ex.expand();
  int positive = 0;
  int negative = 0;
  const auto& m = ex.model();
  for (model::StateId s = 0; s < m.state_count(); ++s) {
    auto c = m.configuration(s);
    if (c.kind != semantics::ConfigKind::Run || m.state_class(s) == StateClass::Expandable) continue;
    (c.valuation[0] > 0 ? positive : negative) += c.valuation[0] != 0;
  }
  EXPECT_GT(positive, 30);
  EXPECT_EQ(negative, 0);
}

TEST(Explorer, PathMassBound) {
  auto ex = make("int x := 0; { x := 1; } [0.25] { x := 2; }", 100);
  ex.expand();
  const auto& m = ex.model();
  auto bounds = explorer::forward_mass_bound(m);
  for (auto s : m.term_states()) {
    double exact = explorer::path_mass_upper_bound(m, s);
    EXPECT_LE(exact, bounds[s] + 1e-12);
    auto v = m.configuration(s).valuation[0];
    EXPECT_NEAR(exact, v == 1 ? 0.25 : 0.75, 1e-12);
  }
  EXPECT_THROW(explorer::path_mass_upper_bound(m, static_cast<model::StateId>(m.state_count())), Error);
}

TEST(Scheduler, InducedChainNeedsEveryChoice) {
  auto ex = make("int x := 0; { x := 1; } [] { x := 2; }", 100);
  ex.expand();
  const auto& m = ex.model();
  auto nd = model::nondet_states(m);
  ASSERT_EQ(nd.size(), 1u);
  EXPECT_THROW(model::induced_chain(m, model::Scheduler()), ModelError);
  model::Scheduler s;
  s.set(nd[0], semantics::Action::Right);
  auto chain = model::induced_chain(m, s);
  EXPECT_EQ(chain.choice(nd[0]).action, semantics::Action::Right);
}

TEST(Dump, ListsStatesAndTransitions) {
  auto ex = make("int x := 0; { x := 1; } [0.5] { x := 2; }", 100);
  ex.expand();
  auto text = model::dump(ex.model());
  EXPECT_NE(text.find("STATE 0"), std::string::npos);
  EXPECT_NE(text.find("TRANS 0"), std::string::npos);
  EXPECT_NE(text.find("1/2"), std::string::npos);
}

}  // namespace
}  // namespace probe
