#include <gtest/gtest.h>

#include <random>

#include "support/brute.hpp"
#include "tecss/connectivity.hpp"
#include "tecss/errors.hpp"
#include "tecss/oracle.hpp"

using namespace tecss;

namespace {

MultiGraph petersen() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST(Oracle, CycleValue) {
  for (int n = 3; n <= 9; ++n) {
    auto r = exact_min_2ecss(brute::cycle(n));
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->value, n);
    EXPECT_TRUE(r->certified);
  }
}

TEST(Oracle, K4Value) {
  MultiGraph k4 = brute::complete(4);
  auto r = exact_min_2ecss(k4);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->value, *brute::min_2ecss(k4));
  EXPECT_EQ(r->value, 4);
}

TEST(Oracle, PetersenMatchesEnumeration) {
  MultiGraph p = petersen();
  auto r = exact_min_2ecss(p);
  ASSERT_TRUE(r.has_value());
  ASSERT_TRUE(r->certified);
  EXPECT_TRUE(brute::is_2ecss(p, r->witness));
  // Full enumeration of the sizes below the claimed value.
  for (int k = 10; k < r->value; ++k)
    EXPECT_FALSE(brute::for_each_subset(p, k, [&](const EdgeSet& s) { return brute::is_2ecss(p, s); }));
}

TEST(Oracle, RejectsNon2EC) {
  EXPECT_THROW(exact_min_2ecss(brute::from_edges(3, {{0, 1}, {1, 2}})), Error);
}

TEST(Oracle, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 250; ++it) {
    int n = 3 + static_cast<int>(rng() % 6);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % (n + 1)), rng);
    if (rng() % 4 == 0) g.add_edge(0, 1);  // a parallel edge now and then
    if (rng() % 5 == 0) g.add_edge(2, 2);
    auto r = exact_min_2ecss(g);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->certified);
    EXPECT_EQ(r->value, static_cast<std::int64_t>(r->witness.size()));
    EXPECT_TRUE(brute::is_2ecss(g, r->witness));
    EXPECT_EQ(r->value, *brute::min_2ecss(g));
    EXPECT_GE(r->value, n);
  }
}

TEST(Oracle, FixedEdgesMatchBruteForce) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 150; ++it) {
    int n = 4 + static_cast<int>(rng() % 5);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % (n + 1)), rng);
    EdgeSet fixed;
    for (const auto& e : g.edges())
      if (rng() % 4 == 0) fixed.push_back(e.id);
    auto r = exact_min_2ecss_with_fixed(g, fixed);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(brute::is_2ecss(g, r->witness));
    EXPECT_EQ(set_intersection(r->witness, fixed), fixed);
    auto best = brute::min_subset(g, [&](const EdgeSet& s) {
      return set_intersection(s, fixed).size() == fixed.size() && brute::is_2ecss(g, s);
    });
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(r->value, *best - static_cast<int>(fixed.size()));
  }
}

TEST(Oracle, GreedyIsMinimal) {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 100; ++it) {
    int n = 4 + static_cast<int>(rng() % 10);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % (2 * n)), rng);
    EdgeSet h = greedy_minimal_2ecss(g, g.edge_ids());
    EXPECT_TRUE(brute::is_2ecss(g, h));
    for (EdgeId id : h) EXPECT_FALSE(brute::is_2ecss(g, set_difference(h, {id})));
  }
}

TEST(Oracle, VerifyExamples) {
  MultiGraph c5 = brute::cycle(5);
  EXPECT_TRUE(verify_2ecss(c5, c5.edge_ids()));
  EXPECT_FALSE(verify_2ecss(c5, {0, 1, 2, 3}));
  MultiGraph k4 = brute::complete(4);  // 0:01 1:02 3:12
  EXPECT_FALSE(verify_2ecss(k4, {0, 1, 3}));
}

TEST(Oracle, VerifyAgreesWithConnectivity) {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 500; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    MultiGraph g = brute::random_multigraph(n, static_cast<int>(rng() % (2 * n + 2)), rng);
    EdgeSet h;
    for (const auto& e : g.edges())
      if (rng() % 3) h.push_back(e.id);
    EXPECT_EQ(verify_2ecss(g, h), is_two_edge_connected(g, h));
  }
}

TEST(Oracle, TfCoverExamples) {
  EXPECT_EQ(exact_min_tf_cover(brute::cycle(4))->value, 4);
  EXPECT_EQ(exact_min_tf_cover(brute::complete(4))->value, 4);
  MultiGraph two(8);
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i) two.add_edge(base + i, base + (i + 1) % 4);
  EXPECT_EQ(exact_min_tf_cover(two)->value, 8);
  EXPECT_THROW(exact_min_tf_cover(brute::from_edges(3, {{0, 1}, {1, 2}})), Error);
  EXPECT_THROW(exact_min_tf_cover(brute::cycle(3)), Error);
}

TEST(Oracle, TfCoverMatchesBruteForce) {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 250; ++it) {
    int n = 4 + static_cast<int>(rng() % 5);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % (n + 2)), rng);
    auto r = exact_min_tf_cover(g);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->certified);
    EXPECT_TRUE(brute::is_tf_cover(g, r->witness));
    EXPECT_EQ(r->value, *brute::min_tf_cover(g));
    EXPECT_LE(r->value, exact_min_2ecss(g)->value);
  }
}

TEST(Oracle, BudgetLeavesResultUncertified) {
  std::mt19937_64 rng(61);
  MultiGraph g = brute::random_2ec(16, 20, rng);
  auto r = exact_min_2ecss(g, 3);
  if (r) {
    EXPECT_FALSE(r->certified);
    EXPECT_TRUE(brute::is_2ecss(g, r->witness));
  }
}
