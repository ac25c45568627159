#include <gtest/gtest.h>

#include "locgame/bush.hpp"
#include "locgame/catalogue.hpp"
#include "oracles.hpp"

using namespace locgame;

TEST(BushStep, ClearsThenRegrows) {
  Graph p = gen::path(5);
  std::vector<Vertex> cut{1};
  auto st = bush_step(VertexSet::all(5), cut, p);
  EXPECT_EQ(st.cleared, VertexSet::of(std::vector<Vertex>{3, 4}));
  EXPECT_EQ(st.regrown, VertexSet::of(std::vector<Vertex>{2, 3, 4}));
}

TEST(BushNumber, MatchesOracleOnConnectedGraphs) {
  for (const auto& g : catalogue::connected_graphs(1, 6)) {
    auto b = bush_number(g, g.order());
    ASSERT_TRUE(b.k.has_value());
    EXPECT_EQ(*b.k, oracle::bush_number(g));
    auto states = replay_schedule(g, b.schedule);
    EXPECT_TRUE(bush_step(states[states.size() - 2], b.schedule.back(), g).cleared.empty());
    for (const auto& cut : b.schedule) EXPECT_EQ(static_cast<int>(cut.size()), std::min(*b.k, g.order()));
  }
}

TEST(BushNumber, PathsNeedOneCutter) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(bush_number(gen::path(n), 3).k, 1) << n;
  auto b = bush_number(gen::path(7), 1);
  EXPECT_EQ(b.schedule.size(), 3u);
}

TEST(BushNumber, MaxKTooSmall) {
  auto b = bush_number(gen::complete_bipartite(3, 3), 0);
  EXPECT_FALSE(b.k.has_value());
}

TEST(BushNumber, BudgetIsEnforced) {
  EXPECT_THROW(clearing_schedule(gen::cycle(12), 1, 2), budget_exceeded);
}

TEST(Blind, SharesTheBushEngine) {
  for (const auto& g : catalogue::connected_graphs(2, 5)) EXPECT_EQ(blind_localization_number(g, g.order()), bush_number(g, g.order()).k);
  EXPECT_EQ(blind_localization_number(gen::cycle(6), 6), 1);
}

TEST(Domination, MatchesOracle) {
  for (const auto& g : catalogue::connected_graphs(1, 6)) EXPECT_EQ(domination_number(g).size, oracle::domination_number(g));
}

TEST(Chain, HoldsOnSmallConnectedGraphs) {
  for (const auto& g : catalogue::connected_graphs(1, 5)) {
    auto c = check_chain(g);
    EXPECT_TRUE(c.holds()) << c.bush << " " << c.blind << " " << c.universal_zeta;
    EXPECT_LE(c.bush, domination_number(g).size);
  }
  EXPECT_THROW(check_chain(gen::path(7)), invalid_input);
}

TEST(TreeCounts, SubdividedCompleteTrees) {
  auto a = subdivided_tree_counts(13, 1, 2);
  EXPECT_EQ(a.total, 40u);
  EXPECT_EQ(a.regular, 14u);
  auto b = subdivided_tree_counts(13, 2, 2);
  EXPECT_EQ(b.total, 547u);
  EXPECT_EQ(b.regular, 183u);
  auto t = build_T(13, 1, 2);
  EXPECT_EQ(t.tree.order(), 40);
  EXPECT_EQ(t.regular_count(), 14);
  EXPECT_TRUE(is_tree(t.tree));
  EXPECT_THROW(build_T(13, 9, 2), invalid_input);
}

TEST(Matching, AgreesWithBruteForceOnAllSmallTrees) {
  Rng rng(11);
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : catalogue::trees(n))
      for (int trial = 0; trial < 20; ++trial) {
        ColoredTree ct{t, static_cast<Vertex>(uniform_below(rng, n)), std::vector<int>(n), {}};
        for (auto& c : ct.colors) c = static_cast<int>(uniform_below(rng, 2));
        auto m = max_bicolored_matching(ct);
        EXPECT_EQ(static_cast<int>(m.size()), oracle::bicolored_matching(t, ct.colors));
        std::vector<int> used(n, 0);
        for (auto [u, v] : m) {
          EXPECT_TRUE(t.adjacent(u, v));
          EXPECT_NE(ct.colors[u], ct.colors[v]);
          EXPECT_EQ(used[u]++ + used[v]++, 0);
        }
      }
}

TEST(Matching, RejectsNonTrees) {
  ColoredTree c{gen::cycle(4), 0, {0, 1, 0, 1}, {}};
  EXPECT_THROW(max_bicolored_matching(c), invalid_input);
  ColoredTree short_colors{gen::path(3), 0, {0, 1}, {}};
  EXPECT_THROW(max_bicolored_matching(short_colors), invalid_input);
}

TEST(Lemma, TreeCountInterpretations) {
  EXPECT_EQ(lemma_tree_count(1, 1, TreeCount::stated), 14);
  EXPECT_EQ(lemma_tree_count(1, 1, TreeCount::actual), 14);
  EXPECT_EQ(lemma_tree_count(1, 2, TreeCount::stated), 170);
  EXPECT_EQ(lemma_tree_count(1, 2, TreeCount::actual), 183);
  EXPECT_EQ(lemma_tree(1, 2).tree.order(), 183);
}

TEST(Lemma, HypothesisWindow) {
  // k=1, h=1, n=14: 7 <= 2*ones < 19
  EXPECT_FALSE(lemma_hypothesis(1, 1, 3, TreeCount::actual));
  EXPECT_TRUE(lemma_hypothesis(1, 1, 4, TreeCount::actual));
  EXPECT_TRUE(lemma_hypothesis(1, 1, 9, TreeCount::actual));
  EXPECT_FALSE(lemma_hypothesis(1, 1, 10, TreeCount::actual));
}

TEST(Lemma, ViolatingColouringIsRejected) {
  std::vector<int> zeros(14, 0);
  EXPECT_THROW(lemma_bimatching_check(1, 1, zeros, TreeCount::stated), invalid_input);
  EXPECT_THROW(lemma_bimatching_check(1, 1, std::vector<int>(5, 0), TreeCount::stated), invalid_input);
  EXPECT_THROW(lemma_tree(1, 7), invalid_input);
}

TEST(Lemma, RandomColouringsSatisfyHypothesisAndLemma) {
  Rng rng(5);
  for (auto which : {TreeCount::stated, TreeCount::actual})
    for (int i = 0; i < 200; ++i) {
      auto col = random_hypothesis_coloring(1, 2, which, rng);
      EXPECT_TRUE(lemma_hypothesis(1, 2, std::count(col.begin(), col.end(), 1), which));
      auto r = lemma_bimatching_check(1, 2, col, which);
      EXPECT_TRUE(r.holds());
    }
}

TEST(Scaling, SmallTreesHaveBushNumberOne) {
  auto rows = bush_scaling_experiment({{2, 1}, {3, 1}, {2, 2}}, 2, 1 << 20);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.status, "ok");
    EXPECT_EQ(r.bush, 1);
    EXPECT_EQ(r.clean_regular.size(), r.schedule.size() + 1);
    EXPECT_EQ(r.clean_regular.back(), r.regular);
  }
  EXPECT_EQ(rows[0].vertices, 3 + 2 * 2);
}
