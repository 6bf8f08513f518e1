#include <gtest/gtest.h>

#include <random>

#include "support/brute.hpp"
#include "tecss/cover.hpp"
#include "tecss/errors.hpp"
#include "tecss/oracle.hpp"

using namespace tecss;

namespace {

MultiGraph prism() {
  return brute::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

TEST(Cover, Examples) {
  auto c4 = min_triangle_free_cover(brute::cycle(4));
  EXPECT_EQ(c4.size(), 4u);
  EXPECT_TRUE(c4.certified_minimum);
  auto k4 = min_triangle_free_cover(brute::complete(4));
  EXPECT_EQ(k4.size(), 4u);
  EXPECT_EQ(*brute::min_tf_cover(brute::complete(4)), 4);
  MultiGraph p = prism();
  auto pc = min_triangle_free_cover(p);
  EXPECT_EQ(pc.size(), 6u);
  EXPECT_EQ(*brute::min_tf_cover(p), 6);
  ASSERT_EQ(pc.component_count(), 1);
  EXPECT_EQ(pc.classes[0], ComponentClass::Cycle);
}

TEST(Cover, RejectsLowDegree) {
  EXPECT_THROW(min_triangle_free_cover(brute::from_edges(3, {{0, 1}, {1, 2}})), Error);
}

TEST(Cover, MatchesBruteForce) {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 220; ++it) {
    int n = 4 + static_cast<int>(rng() % 7);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % (n + 1)), rng);
    auto c = min_triangle_free_cover(g);
    ASSERT_TRUE(c.certified_minimum);
    EXPECT_TRUE(brute::is_tf_cover(g, c.edges));
    auto oracle = exact_min_tf_cover(g);
    EXPECT_EQ(static_cast<std::int64_t>(c.size()), oracle->value);
    if (g.edge_count() <= 16) {
      EXPECT_EQ(static_cast<int>(c.size()), *brute::min_tf_cover(g));
    }
    EXPECT_LE(static_cast<std::int64_t>(c.size()), exact_min_2ecss(g)->value);
  }
}

TEST(Cover, HeuristicIsValidOnLargerGraphs) {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 100; ++it) {
    int n = 8 + static_cast<int>(rng() % 40);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % (2 * n)), rng);
    EdgeSet h = heuristic_triangle_free_cover(g);
    EXPECT_TRUE(brute::is_tf_cover(g, h));
    CoverOptions small;
    small.exact_max_vertices = 10;
    auto c = min_triangle_free_cover(g, small);
    EXPECT_TRUE(brute::is_tf_cover(g, c.edges));
    EXPECT_EQ(c.certified_minimum, n <= 10);
  }
}

TEST(Cover, ExactOnFortyVerticesStaysValid) {
  std::mt19937_64 rng(79);
  for (int it = 0; it < 10; ++it) {
    MultiGraph g = brute::random_2ec(40, 25, rng);
    auto c = min_triangle_free_cover(g);
    EXPECT_TRUE(brute::is_tf_cover(g, c.edges));
    EXPECT_LE(c.size(), heuristic_triangle_free_cover(g).size());
  }
}

TEST(Canonical, CheckExamples) {
  MultiGraph c5 = brute::cycle(5);
  EXPECT_TRUE(check_canonical(make_cover(c5, c5.edge_ids())).empty());

  MultiGraph seven = brute::cycle(6);
  seven.add_edge(0, 3);
  auto v7 = check_canonical(make_cover(seven, seven.edge_ids()));
  ASSERT_EQ(v7.size(), 1u);
  EXPECT_EQ(v7[0].kind, ViolationKind::SmallNonCycleComponent);

  // C5 block and C6 block joined by a bridge.
  MultiGraph g = brute::from_edges(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                                        {8, 9}, {9, 10}, {10, 5}});
  auto v = check_canonical(make_cover(g, g.edge_ids()));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::PendantBlockUnder6);
}

TEST(Canonical, NonPendantBlockUnder4) {
  // C6 - bridge - two-vertex block (parallel pair) - bridge - C6.
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 6; ++i) es.push_back({i, (i + 1) % 6});
  es.push_back({0, 6});
  es.push_back({6, 7});
  es.push_back({6, 7});
  es.push_back({7, 8});
  for (int i = 0; i < 6; ++i) es.push_back({8 + i, 8 + (i + 1) % 6});
  MultiGraph g = brute::from_edges(14, es);
  auto v = check_canonical(make_cover(g, g.edge_ids()));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::NonPendantBlockUnder4);
}

TEST(Canonical, AlreadyCanonicalUnchanged) {
  MultiGraph g = brute::cycle(6);
  g.add_edge(0, 3);
  TwoEdgeCover h = make_cover(g, {0, 1, 2, 3, 4, 5});
  CanonicalizeStats stats;
  auto out = canonicalize(g, h, &stats);
  EXPECT_EQ(stats.iterations, 0);
  EXPECT_EQ(out.edges, h.edges);
}

TEST(Canonical, ChordIsDeleted) {
  MultiGraph g = brute::cycle(4);
  EdgeId chord = g.add_edge(0, 2);
  CanonicalizeStats stats;
  auto out = canonicalize(g, make_cover(g, g.edge_ids()), &stats);
  EXPECT_EQ(stats.iterations, 1);
  EXPECT_EQ(out.size(), 4u);
  EXPECT_FALSE(set_contains(out.edges, chord));
}

TEST(Canonical, TwoSquaresMergeIntoC8) {
  MultiGraph g(8);
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i) g.add_edge(base + i, base + (i + 1) % 4);
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  TwoEdgeCover h = make_cover(g, {0, 1, 2, 3, 4, 5, 6, 7});
  CanonicalizeStats stats;
  auto out = canonicalize(g, h, &stats);
  EXPECT_EQ(out.size(), 8u);
  EXPECT_EQ(out.component_count(), 1);
  EXPECT_EQ(out.bridge_count(), 0);
  EXPECT_GE(stats.iterations, 1);
}

TEST(Canonical, LocalSearchProperties) {
  std::mt19937_64 rng(83);
  for (int it = 0; it < 150; ++it) {
    int n = 6 + static_cast<int>(rng() % 14);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % n), rng);
    auto start = min_triangle_free_cover(g);
    CanonicalizeStats stats;
    auto out = improve_cover(g, start, &stats);
    EXPECT_TRUE(brute::is_tf_cover(g, out.edges));
    EXPECT_LE(out.size(), start.size());
    if (start.certified_minimum) {
      EXPECT_EQ(out.size(), start.size());
    }
    EXPECT_LE(out.component_count(), start.component_count());
    // A fixpoint admits no further move.
    CanonicalizeStats again;
    improve_cover(g, out, &again);
    EXPECT_EQ(again.iterations, 0);
  }
}
