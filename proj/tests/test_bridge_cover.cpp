#include <gtest/gtest.h>

#include <random>

#include "support/brute.hpp"
#include "tecss/bridge_cover.hpp"
#include "tecss/connectivity.hpp"
#include "tecss/cover.hpp"
#include "tecss/credits.hpp"
#include "tecss/errors.hpp"

using namespace tecss;

namespace {

// Two C6 blocks (0..5 and 6..11) joined by the bridge 0-6.
std::vector<std::pair<int, int>> dumbbell_edges() {
  std::vector<std::pair<int, int>> es;
  for (int base : {0, 6})
    for (int i = 0; i < 6; ++i) es.push_back({base + i, base + (i + 1) % 6});
  es.push_back({0, 6});
  return es;
}

// Blobs (cycles with a chord) linked in a chain by paths through degree-2
// vertices, plus a few random extra edges. Minimum covers of such hosts
// often contain bridges.
MultiGraph blob_chain(int blobs, int extra, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> es;
  std::vector<std::vector<int>> members;
  int n = 0;
  for (int b = 0; b < blobs; ++b) {
    int len = 6 + static_cast<int>(rng() % 3);
    std::vector<int> vs;
    for (int i = 0; i < len; ++i) vs.push_back(n + i);
    for (int i = 0; i < len; ++i) es.push_back({n + i, n + (i + 1) % len});
    es.push_back({n, n + len / 2});
    n += len;
    members.push_back(vs);
  }
  for (int b = 0; b + 1 < blobs; ++b) {
    const auto& from = members[b];
    const auto& to = members[b + 1];
    int mid = n++;
    es.push_back({from[rng() % from.size()], mid});
    es.push_back({mid, to[rng() % to.size()]});
  }
  // Direct links keep the host 2-edge-connected.
  for (int b = 0; b + 1 < blobs; ++b) es.push_back({members[b][1], members[b + 1][2]});
  for (int i = 0; i < extra; ++i) {
    int a = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
    if (a != c) es.push_back({std::min(a, c), std::max(a, c)});
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return brute::from_edges(n, es);
}

}  // namespace

TEST(Credits, QuarterStrings) {
  EXPECT_EQ(quarters_to_string(25), "25/4");
  EXPECT_EQ(quarters_to_string(44), "11");
  EXPECT_EQ(quarters_to_string(50), "25/2");
  EXPECT_EQ(parse_quarters("65/4"), 65);
  EXPECT_EQ(parse_quarters("11"), 44);
  EXPECT_THROW(parse_quarters("1/3"), Error);
}

TEST(Credits, CycleComponent) {
  MultiGraph c5 = brute::cycle(5);
  auto h = make_cover(c5, c5.edge_ids());
  auto ledger = init_credits(h);
  EXPECT_EQ(quarters_to_string(ledger.total_quarters()), "5/4");
  EXPECT_EQ(cost(h, ledger).to_string(), "25/4");
}

TEST(Credits, LargeComponent) {
  MultiGraph g = brute::cycle(8);
  g.add_edge(0, 4);
  auto h = make_cover(g, g.edge_ids());
  auto ledger = init_credits(h);
  EXPECT_EQ(ledger.total_quarters(), 8);
  EXPECT_EQ(cost(h, ledger).to_string(), "11");
}

TEST(Credits, ComplexComponent) {
  MultiGraph g = brute::from_edges(12, dumbbell_edges());
  auto h = make_cover(g, g.edge_ids());
  auto ledger = init_credits(h);
  EXPECT_EQ(quarters_to_string(ledger.total_quarters()), "13/4");
  EXPECT_EQ(cost(h, ledger).to_string(), "65/4");
  EXPECT_EQ(ledger.quarter_credits.size(), 4u);
  EXPECT_EQ((ledger.quarter_credits.at({LedgerKind::Bridge, 12})), 1);
  auto bound = check_ledger_bound(h, ledger);
  EXPECT_TRUE(bound.cost_within);
  EXPECT_TRUE(bound.complex_chain);
}

TEST(Credits, CostExamples) {
  MultiGraph empty;
  auto e = make_cover(empty, {});
  EXPECT_EQ(cost(e, init_credits(e)).quarters, 0);
  MultiGraph c4 = brute::cycle(4);
  auto h4 = make_cover(c4, c4.edge_ids());
  EXPECT_EQ(cost(h4, init_credits(h4)).to_string(), "5");
  MultiGraph two(10);
  for (int i = 0; i < 4; ++i) two.add_edge(i, (i + 1) % 4);
  for (int i = 0; i < 6; ++i) two.add_edge(4 + i, 4 + (i + 1) % 6);
  auto h = make_cover(two, two.edge_ids());
  EXPECT_EQ(cost(h, init_credits(h)).to_string(), "25/2");
}

TEST(Credits, RejectsNonCanonical) {
  MultiGraph g = brute::cycle(6);
  g.add_edge(0, 3);
  EXPECT_THROW(init_credits(make_cover(g, g.edge_ids())), Error);
}

TEST(BridgeCover, BridgelessUnchanged) {
  MultiGraph c6 = brute::cycle(6);
  auto h = make_cover(c6, c6.edge_ids());
  auto r = cover_bridges(c6, h, init_credits(h));
  EXPECT_TRUE(r.steps.empty());
  EXPECT_EQ(r.cover.edges, h.edges);
  EXPECT_EQ(cost(r.cover, r.ledger), cost(h, init_credits(h)));
}

TEST(BridgeCover, DumbbellEar) {
  auto es = dumbbell_edges();
  es.push_back({2, 8});
  es.push_back({4, 10});
  MultiGraph g = brute::from_edges(12, es);
  EdgeSet cover_ids;
  for (EdgeId id = 0; id < 13; ++id) cover_ids.push_back(id);
  auto h = make_cover(g, cover_ids);
  auto ledger = init_credits(h);
  auto r = cover_bridges(g, h, ledger);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.cover.bridge_count(), 0);
  EXPECT_LE(cost(r.cover, r.ledger), cost(h, ledger));
  EXPECT_TRUE(check_canonical(r.cover).empty());
  EXPECT_EQ(r.ledger, init_credits(r.cover));
}

TEST(BridgeCover, StuckCarriesDiagnostics) {
  // The host has no edge besides the cover: nothing can cover the bridge.
  MultiGraph g = brute::from_edges(12, dumbbell_edges());
  auto h = make_cover(g, g.edge_ids());
  try {
    cover_bridges(g, h, init_credits(h));
    FAIL() << "expected Stuck";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Stuck);
    EXPECT_NE(e.diagnostics().find("12 13"), std::string::npos);
  }
}

TEST(BridgeCover, ContractOnRandomCovers) {
  std::mt19937_64 rng(89);
  int with_bridges = 0, stuck = 0, covered = 0;
  for (int it = 0; it < 300; ++it) {
    MultiGraph g = it % 2 ? brute::random_2ec(10 + static_cast<int>(rng() % 20), static_cast<int>(rng() % 10), rng)
                          : blob_chain(2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), rng);
    TwoEdgeCover h;
    try {
      h = canonicalize(g, min_triangle_free_cover(g));
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::NotCanonical);
      continue;
    }
    auto ledger = init_credits(h);
    auto bound = check_ledger_bound(h, ledger);
    EXPECT_TRUE(bound.cost_within) << bound.detail;
    EXPECT_TRUE(bound.complex_chain) << bound.detail;
    if (h.bridge_count() > 0) ++with_bridges;
    BridgeCoverResult r;
    try {
      r = cover_bridges(g, h, ledger);
    } catch (const Error& e) {
      // Random graphs are not structured; a Stuck report is allowed here.
      ASSERT_EQ(e.kind(), ErrorKind::Stuck);
      ++stuck;
      continue;
    }
    if (h.bridge_count() > 0) ++covered;
    EXPECT_LE(static_cast<int>(r.steps.size()), h.bridge_count());
    Cost previous = cost(h, ledger);
    int bridges = h.bridge_count();
    for (const auto& s : r.steps) {
      EXPECT_EQ(s.bridges_before, bridges);
      EXPECT_LT(s.bridges_after, s.bridges_before);
      EXPECT_EQ(s.cost_before, previous);
      EXPECT_LE(s.cost_after, s.cost_before);
      previous = s.cost_after;
      bridges = s.bridges_after;
    }
    EXPECT_EQ(r.cover.bridge_count(), 0);
    EXPECT_TRUE(check_canonical(r.cover).empty());
    EXPECT_TRUE(brute::is_tf_cover(g, r.cover.edges));
    EXPECT_EQ(r.ledger, init_credits(r.cover));
  }
  EXPECT_GT(with_bridges, 20);
  EXPECT_GT(covered, 20);
  std::printf("covers with bridges: %d, covered: %d, stuck: %d\n", with_bridges, covered, stuck);
}
