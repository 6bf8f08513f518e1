#include <gtest/gtest.h>

#include <random>

#include "support/brute.hpp"
#include "tecss/cuts.hpp"
#include "tecss/errors.hpp"
#include "tecss/generate.hpp"
#include "tecss/oracle.hpp"
#include "tecss/reduce.hpp"

using namespace tecss;

namespace {

ReductionConfig with_n0(int n0) {
  ReductionConfig cfg;
  cfg.enumeration_budget = n0;
  return cfg;
}

// Configuration large enough for the typed enumeration to run to completion on
// the glued-clique instances below.
ReductionConfig uncapped() {
  ReductionConfig cfg;
  cfg.typed_solution_cap = 3000;
  cfg.typed_oracle_calls = 150000;
  return cfg;
}

void expect_well_formed(const MultiGraph& g, const ReductionResult& r) {
  EXPECT_TRUE(brute::is_2ecss(g, r.edges));
  EXPECT_TRUE(r.trace.replay_ok());
  ASSERT_FALSE(r.trace.steps.empty());
  EXPECT_EQ(r.trace.steps[0].result, r.edges);
  for (const auto& s : r.trace.steps)
    for (int c : s.children) {
      const auto& child = r.trace.steps[c];
      EXPECT_TRUE(child.n < s.n || (child.n == s.n && child.m < s.m)) << s.kind << " -> " << child.kind;
    }
}

const TraceStep* first_step(const ReductionResult& r, const std::string& prefix) {
  for (const auto& s : r.trace.steps)
    if (s.kind.rfind(prefix, 0) == 0) return &s;
  return nullptr;
}

// Square on the given four vertices; returns the edge ids.
EdgeSet add_square(MultiGraph& g, VertexId a, VertexId b, VertexId c, VertexId d) {
  return make_edge_set({g.add_edge(a, b), g.add_edge(b, c), g.add_edge(c, d), g.add_edge(d, a)});
}

SolutionType classify(const MultiGraph& g, const EdgeSet& h, VertexId u, VertexId v, VertexId w) {
  return classify_solution_type(g, h, {u, v, w});
}

}  // namespace

TEST(Config, Validation) {
  ReductionConfig cfg;
  EXPECT_NO_THROW(validate(cfg));
  cfg.alpha = Rational(6, 5);
  EXPECT_THROW(validate(cfg), Error);
  cfg = {};
  cfg.epsilon = Rational(1, 23);
  EXPECT_THROW(validate(cfg), Error);
  cfg.epsilon = Rational(0);
  EXPECT_THROW(validate(cfg), Error);
  cfg.epsilon = Rational(1, 4);
  cfg.check_parameters = false;
  EXPECT_NO_THROW(validate(cfg));
  cfg.epsilon = Rational(1);
  EXPECT_THROW(validate(cfg), Error);
}

TEST(Reduce, CycleIsItsOwnSolution) {
  MultiGraph g = brute::cycle(7);
  for (int n0 : {12, 3}) {
    auto r = reduce(g, with_n0(n0), exact_leaf_solver);
    EXPECT_EQ(r.edges, g.edge_ids()) << "n0=" << n0;
    expect_well_formed(g, r);
  }
}

TEST(Reduce, CompleteFourIsHamiltonian) {
  MultiGraph g = brute::complete(4);
  auto r = reduce(g, with_n0(12), exact_leaf_solver);
  EXPECT_EQ(r.edges.size(), 4u);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].kind, "exact");
}

TEST(Reduce, OneCutJoinsSideSolutions) {
  // Two squares with chords sharing vertex 0.
  MultiGraph g(7);
  add_square(g, 0, 1, 2, 3);
  g.add_edge(1, 3);
  add_square(g, 0, 4, 5, 6);
  g.add_edge(4, 6);
  auto r = reduce(g, with_n0(3), exact_leaf_solver);
  EXPECT_EQ(r.edges.size(), 8u);
  EXPECT_EQ(r.trace.steps[0].kind, "one-cut");
  EXPECT_EQ(r.trace.steps[0].children.size(), 2u);
  expect_well_formed(g, r);
}

TEST(Reduce, LoopsAndParallelsAreDropped) {
  MultiGraph g = brute::cycle(5);
  g.add_edge(0, 1);
  g.add_edge(2, 2);
  auto r = reduce(g, with_n0(3), exact_leaf_solver);
  EXPECT_EQ(r.edges.size(), 5u);
  EXPECT_EQ(r.trace.steps[0].kind, "loops-parallels");
  expect_well_formed(g, r);
}

TEST(Reduce, RejectsGraphsThatAreNotTwoEdgeConnected) {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  try {
    reduce(g, with_n0(12), exact_leaf_solver);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTwoEdgeConnected);
  }
}

TEST(Reduce, LeafSolverReceivesOnlyLargeGraphs) {
  MultiGraph g = generate("structured-random", {{"n", 16}, {"degree", 3}}, 3);
  int calls = 0;
  auto solver = [&](const MultiGraph& leaf) {
    ++calls;
    EXPECT_GT(leaf.vertex_count(), 6);
    return exact_leaf_solver(leaf);
  };
  auto r = reduce(g, with_n0(6), solver);
  expect_well_formed(g, r);
  EXPECT_EQ(r.leaves, r.trace.count("structured-leaf"));
  EXPECT_EQ(calls, r.leaves);
  EXPECT_FALSE(r.certified);
}

TEST(Reduce, GuardIsExact) {
  // Brute-force guard: n <= min(4/eps, n0) returns an optimum.
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    int n = 4 + static_cast<int>(rng() % 9);
    MultiGraph g = brute::random_2ec(n, static_cast<int>(rng() % 6), rng);
    auto r = reduce(g, with_n0(12), exact_leaf_solver);
    auto opt = brute::min_2ecss(g);
    ASSERT_TRUE(opt);
    EXPECT_EQ(static_cast<int>(r.edges.size()), *opt) << "instance " << i;
    EXPECT_TRUE(r.certified);
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(Reduce, RandomInstancesAreFeasible) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    MultiGraph g = generate("random-2ec", {{"n", 14 + static_cast<std::int64_t>(seed % 10)}}, seed);
    auto r = reduce(g, with_n0(8), exact_leaf_solver);
    expect_well_formed(g, r);
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    MultiGraph g = brute::random_multigraph(12, 30, rng);
    if (!brute::is_2ecss(g, g.edge_ids())) continue;
    auto r = reduce(g, with_n0(5), exact_leaf_solver);
    expect_well_formed(g, r);
  }
}

TEST(Reduce, BothLargeSidesJoinedByPatch) {
  // Two K10 sharing three vertices; with eps = 1/4 a side of 7 is already large.
  MultiGraph g = generate("glued-cliques", {{"a", 10}, {"b", 10}, {"shared", 3}}, 0);
  ASSERT_EQ(g.vertex_count(), 17);
  ReductionConfig cfg;
  cfg.check_parameters = false;
  cfg.epsilon = Rational(1, 4);
  auto r = reduce(g, cfg, exact_leaf_solver);
  expect_well_formed(g, r);
  EXPECT_FALSE(r.certified);
  ASSERT_EQ(r.trace.steps[0].kind, "three-cut-both-large");
  EXPECT_EQ(r.trace.steps[0].children.size(), 2u);
  EXPECT_LE(r.trace.steps[0].own.size(), 4u);
}

TEST(Reduce, LargeThreeCutOnGluedCliques) {
  MultiGraph g = generate("glued-cliques", {}, 0);
  auto r = reduce(g, with_n0(12), exact_leaf_solver);
  expect_well_formed(g, r);
  const TraceStep* s = first_step(r, "three-cut-");
  ASSERT_NE(s, nullptr);
}

struct TypedCase {
  std::int64_t drop;
  std::uint64_t seed;
  const char* kind;
  std::size_t stripped;
};

class ThreeCutBranch : public ::testing::TestWithParam<TypedCase> {};

TEST_P(ThreeCutBranch, TakesExpectedBranch) {
  const auto& c = GetParam();
  MultiGraph g = generate("glued-cliques", {{"a", 10}, {"b", 10}, {"shared", 3}, {"drop", c.drop}}, c.seed);
  auto r = reduce(g, uncapped(), exact_leaf_solver);
  expect_well_formed(g, r);
  const TraceStep* s = first_step(r, "three-cut-");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->kind, c.kind) << s->detail;
  EXPECT_EQ(s->detail.find("capped"), std::string::npos) << s->detail;
  EXPECT_EQ(s->stripped.size(), c.stripped);
  // n0 is below 4/eps, so the run as a whole is never certified.
  EXPECT_FALSE(r.certified);
}

// The pair count in the detail is the number of distinct cut-vertex pairs
// joined by a minimum C2 side solution: one for (i), two for (ii), three for (iii).
INSTANTIATE_TEST_SUITE_P(GluedCliques, ThreeCutBranch,
                         ::testing::Values(TypedCase{40, 14, "three-cut-C2-i", 3},
                                           TypedCase{25, 17, "three-cut-C2-ii", 4},
                                           TypedCase{30, 0, "three-cut-C2-iii", 3},
                                           TypedCase{45, 14, "three-cut-B1", 0}));

TEST(Reduce, C2SubcaseOneUsesPathGadget) {
  MultiGraph g = generate("glued-cliques", {{"drop", 40}}, 14);
  auto r = reduce(g, uncapped(), exact_leaf_solver);
  const TraceStep* s = first_step(r, "three-cut-C2-i");
  ASSERT_NE(s, nullptr);
  EXPECT_NE(s->detail.find("pairs=1"), std::string::npos) << s->detail;
  ASSERT_EQ(s->children.size(), 1u);
  // The gadget child carries one dummy vertex and the three dummy edges.
  const TraceStep& gadget = r.trace.steps[s->children[0]];
  auto cut = find_vertex_cut_of_kind(g, CutKind::ThreeLarge, true);
  ASSERT_TRUE(cut);
  EXPECT_EQ(gadget.n, static_cast<int>(cut->side_b.size()) + 3 + 1);
  for (EdgeId d : s->stripped) EXPECT_FALSE(set_contains(r.edges, d));
}

TEST(Classify, Examples) {
  {
    MultiGraph g = brute::cycle(6);
    EXPECT_EQ(classify(g, g.edge_ids(), 0, 2, 4), SolutionType::A);
  }
  MultiGraph g(12);
  EdgeSet s1 = add_square(g, 0, 1, 2, 3);
  EdgeSet s2 = add_square(g, 4, 5, 6, 7);
  EdgeSet s3 = add_square(g, 8, 9, 10, 11);
  EdgeId b12 = g.add_edge(3, 4);
  EdgeId b23 = g.add_edge(7, 8);
  auto all = [](std::initializer_list<EdgeSet> parts) {
    EdgeSet out;
    for (const auto& p : parts) out = set_union(out, p);
    return out;
  };
  EdgeSet three = all({s1, s2, s3});
  {
    MultiGraph two(8);
    EdgeSet h = set_union(add_square(two, 0, 1, 2, 3), add_square(two, 4, 5, 6, 7));
    EXPECT_EQ(classify(two, h, 0, 2, 4), SolutionType::B2);
  }
  // Cut vertices 0, 4, 8 sit in different squares.
  EXPECT_EQ(classify(g, three, 0, 4, 8), SolutionType::C3);
  EXPECT_EQ(classify(g, set_union(three, {b12}), 0, 4, 8), SolutionType::C2);
  EXPECT_EQ(classify(g, set_union(three, make_edge_set({b12, b23})), 0, 4, 8), SolutionType::C1);
  EXPECT_EQ(classify(g, set_union(three, make_edge_set({b12, b23})), 0, 2, 8), SolutionType::B1);
  // The far square becomes a leaf without a cut vertex.
  EXPECT_THROW(classify(g, set_union(three, make_edge_set({b12, b23})), 0, 2, 1), Error);
  // A square holding no cut vertex, alone or as a leaf.
  EXPECT_THROW(classify(g, three, 0, 1, 4), Error);
  try {
    classify(g, set_union(three, {b23}), 0, 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Untypeable);
  }
  // A pendant path ending off the cut.
  MultiGraph h = brute::cycle(4);
  VertexId x = h.add_vertex();
  EdgeId p = h.add_edge(0, x);
  EXPECT_THROW(classify(h, set_union(h.edge_ids(), {p}), 0, 1, 2), Error);
  EXPECT_EQ(classify(h, set_union(h.edge_ids(), {p}), 0, 1, x), SolutionType::B1);
}

TEST(Classify, CompatibilityTable) {
  using T = SolutionType;
  EXPECT_EQ(compatible_types(T::C3), std::vector<T>{T::A});
  EXPECT_EQ(compatible_types(T::C2), (std::vector<T>{T::A, T::B1}));
  EXPECT_EQ(compatible_types(T::A).size(), 6u);
  // Symmetric.
  for (T a : {T::A, T::B1, T::B2, T::C1, T::C2, T::C3})
    for (T b : compatible_types(a)) {
      auto back = compatible_types(b);
      EXPECT_NE(std::find(back.begin(), back.end(), a), back.end()) << to_string(a) << " " << to_string(b);
    }
}

TEST(EnumerateTyped, Examples) {
  auto always = [](const EdgeSet&) { return true; };
  MultiGraph c9 = brute::cycle(9);
  auto a = enumerate_min_typed_subgraph(c9, {0, 3, 6}, SolutionType::A, always);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, c9.edge_ids());

  // Path 0 - 1 - 2 - 3 - 4 with u = 0, w = 4: no three separate components.
  MultiGraph path(5);
  for (int i = 0; i < 4; ++i) path.add_edge(i, i + 1);
  EXPECT_FALSE(enumerate_min_typed_subgraph(path, {0, 2, 4}, SolutionType::C3, always));

  MultiGraph g(12);
  add_square(g, 0, 1, 2, 3);
  add_square(g, 4, 5, 6, 7);
  add_square(g, 8, 9, 10, 11);
  g.add_edge(3, 4);
  g.add_edge(7, 8);
  g.add_edge(11, 0);
  auto c3 = enumerate_min_typed_subgraph(g, {0, 4, 8}, SolutionType::C3, always);
  ASSERT_TRUE(c3);
  EXPECT_EQ(c3->size(), 12u);
  // The compatibility callback filters.
  EXPECT_FALSE(enumerate_min_typed_subgraph(g, {0, 4, 8}, SolutionType::C3, [](const EdgeSet&) { return false; }));
}

TEST(EnumerateTyped, BudgetIsEnforced) {
  MultiGraph g = brute::complete(7);
  try {
    enumerate_min_typed_subgraph(g, {0, 1, 2}, SolutionType::C3, [](const EdgeSet&) { return true; }, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(EnumerateTyped, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  auto always = [](const EdgeSet&) { return true; };
  int found = 0;
  for (int i = 0; i < 40; ++i) {
    MultiGraph g = brute::random_multigraph(6 + static_cast<int>(rng() % 2), 11, rng);
    std::array<VertexId, 3> cut{0, 1, 2};
    for (SolutionType t : {SolutionType::A, SolutionType::B1, SolutionType::B2, SolutionType::C1,
                           SolutionType::C2, SolutionType::C3}) {
      auto fast = enumerate_min_typed_subgraph(g, cut, t, always);
      auto slow = brute::min_subset(g, [&](const EdgeSet& h) {
        try {
          return classify_solution_type(g, h, cut) == t;
        } catch (const Error&) {
          return false;
        }
      });
      ASSERT_EQ(fast.has_value(), slow.has_value()) << "instance " << i << " type " << to_string(t);
      if (fast) {
        EXPECT_EQ(static_cast<int>(fast->size()), *slow);
        EXPECT_EQ(classify_solution_type(g, *fast, cut), t);
        ++found;
      }
    }
  }
  EXPECT_GT(found, 40);
}

TEST(FindPatch, Examples) {
  MultiGraph g = brute::cycle(4);
  g.add_edge(0, 2);
  EdgeSet path = make_edge_set({0, 1, 2});
  auto f = find_patch(g, path, 4);
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, EdgeSet{3});
  // Already 2EC: empty patch.
  auto none = find_patch(g, g.edge_ids(), 0);
  ASSERT_TRUE(none);
  EXPECT_TRUE(none->empty());
  // A triangle from nothing needs three edges.
  MultiGraph t = brute::cycle(3);
  EXPECT_FALSE(find_patch(t, {}, 2));
  auto all = find_patch(t, {}, 4);
  ASSERT_TRUE(all);
  EXPECT_EQ(all->size(), 3u);
}

TEST(FindPatch, MatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    MultiGraph g = brute::random_2ec(7, 5, rng);
    EdgeSet h;
    for (EdgeId id : g.edge_ids())
      if (rng() % 3 != 0) h.push_back(id);
    EdgeSet rest = set_difference(g.edge_ids(), h);
    std::optional<int> best;
    for (int k = 0; k <= 4 && !best; ++k) {
      MultiGraph sub = edge_subgraph(g, rest);
      brute::for_each_subset(sub, k, [&](const EdgeSet& f) {
        if (!brute::is_2ecss(g, set_union(h, f))) return false;
        best = k;
        return true;
      });
    }
    auto f = find_patch(g, h, 4);
    ASSERT_EQ(f.has_value(), best.has_value()) << "instance " << i;
    if (f) {
      EXPECT_EQ(static_cast<int>(f->size()), *best);
      EXPECT_TRUE(brute::is_2ecss(g, set_union(h, *f)));
      EXPECT_TRUE(set_intersection(*f, h).empty());
    }
  }
}

TEST(IrrelevantEdges, Examples) {
  MultiGraph g = brute::cycle(4);
  EdgeId chord = g.add_edge(0, 2);
  EXPECT_EQ(irrelevant_edges(g), EdgeSet{chord});
  EXPECT_TRUE(irrelevant_edges(brute::complete(4)).empty());
  EXPECT_TRUE(irrelevant_edges(brute::cycle(5)).empty());
}

TEST(ApproxBound, Examples) {
  MultiGraph c5 = brute::cycle(5);
  ReductionConfig cfg = with_n0(12);
  auto r = reduce(c5, cfg, exact_leaf_solver);
  auto check = verify_approx_bound(r, 5, cfg, 5);
  ASSERT_TRUE(check.ratio);
  EXPECT_DOUBLE_EQ(*check.ratio, 1.0);
  EXPECT_FALSE(check.bound_applies);
  EXPECT_TRUE(check.within_bound);

  MultiGraph g12 = generate("random-2ec", {{"n", 12}}, 4);
  auto r12 = reduce(g12, cfg, exact_leaf_solver);
  EXPECT_TRUE(r12.certified);
  auto opt12 = exact_min_2ecss(g12);
  auto c12 = verify_approx_bound(r12, 12, cfg, opt12->value);
  EXPECT_EQ(c12.size, opt12->value);
  EXPECT_TRUE(c12.within_bound);

  MultiGraph g14 = generate("random-2ec", {{"n", 14}}, 2);
  ReductionConfig low = with_n0(8);
  auto r14 = reduce(g14, low, exact_leaf_solver);
  EXPECT_FALSE(r14.certified);
  auto opt14 = exact_min_2ecss(g14);
  auto c14 = verify_approx_bound(r14, 14, low, opt14->value);
  ASSERT_TRUE(c14.ratio);
  EXPECT_GE(*c14.ratio, 1.0);
  EXPECT_FALSE(c14.bound_applies);

  // The bound itself, on a result that claims certification.
  ReductionResult fake;
  // 5/4 * 100 + 4/24 * 100 - 4 = 413/3, just above 137.
  fake.edges = EdgeSet(137);
  for (int i = 0; i < 137; ++i) fake.edges[i] = i;
  fake.certified = true;
  auto big = verify_approx_bound(fake, 100, ReductionConfig{}, 100);
  EXPECT_TRUE(big.bound_applies);
  EXPECT_EQ(big.bound, "413/3");
  EXPECT_TRUE(big.within_bound);
  fake.edges.push_back(137);
  EXPECT_FALSE(verify_approx_bound(fake, 100, ReductionConfig{}, 100).within_bound);
}
