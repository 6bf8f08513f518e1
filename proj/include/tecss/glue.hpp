#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tecss/cover.hpp"
#include "tecss/credits.hpp"
#include "tecss/oracle.hpp"
#include "tecss/rational.hpp"

namespace tecss {

// G contracted by the 2EC components of a bridgeless cover, loops dropped.
// Node i is the component whose smallest vertex is the i-th smallest among
// component minima; edges keep their host ids.
struct ComponentGraph {
  MultiGraph contracted;
  std::vector<int> node_of_vertex;
  std::vector<std::vector<VertexId>> node_vertices;
  std::vector<int> node_component;  // index into the cover's decomposition
};

ComponentGraph build_component_graph(const MultiGraph& g, const TwoEdgeCover& h);

struct Segment {
  std::vector<int> nodes;
  EdgeSet edges;  // component-graph edges of a non-trivial segment
  bool trivial = false;
};

// Non-trivial segments (2-connected pieces with at least 3 nodes) first, then
// one trivial segment per node in none of them.
std::vector<Segment> compute_segments(const ComponentGraph& cg);

enum class GlueKind { MakeHuge, TrivialSegmentGlue, NonTrivialSegmentGlue };

const char* to_string(GlueKind kind);

struct GlueStep {
  GlueKind kind = GlueKind::MakeHuge;
  std::string rule;
  EdgeSet added;
  EdgeSet removed;
  std::int64_t delta_quarters = 0;
  int components_before = 0;
  int components_after = 0;
};

struct GlueState {
  TwoEdgeCover cover;
  CreditLedger ledger;
};

struct GlueOptions {
  Rational alpha{5, 4};
  std::int64_t cycle_budget = 1'000'000;
  std::int64_t oracle_budget = kDefaultOracleBudget;
};

constexpr int kHugeVertices = 10;

// Adds a cycle of the component graph through the largest component (and a
// second one if needed) so that some component has at least 10 vertices.
GlueStep make_huge(const MultiGraph& g, GlueState& state, const GlueOptions& options = {});

// L is a trivial segment of the component graph and holds a huge component.
GlueStep glue_trivial_segment(const MultiGraph& g, GlueState& state, int huge_node, const GlueOptions& options = {});

GlueStep glue_nontrivial_segment(const MultiGraph& g, GlueState& state, int huge_node, const Segment& segment,
                                 const GlueOptions& options = {});

struct HugeSmallOutcome {
  std::vector<EdgeId> cycle;  // component-graph cycle through L and A
  VertexId u = -1, v = -1;    // where the cycle enters and leaves C_A
  bool via_path = true;       // (a) Hamiltonian path, otherwise (b) joint 2EC subgraph with D
  std::vector<VertexId> path;
  int other_node = -1;        // D for outcome (b)
  EdgeSet replacement;        // path edges for (a), F for (b)
};

// Searches the outcomes of the small-cycle ladder in order and returns the
// first one `accept` agrees with.
std::optional<HugeSmallOutcome> cycle_through_huge_and_small(
    const MultiGraph& g, const ComponentGraph& cg, const TwoEdgeCover& h, int huge_node, int small_node,
    const std::function<bool(const HugeSmallOutcome&)>& accept, const GlueOptions& options = {});

struct GlueResult {
  EdgeSet edges;
  std::vector<GlueStep> steps;
  Cost initial_cost;
  Cost final_cost;
};

// Merges the components of a bridgeless canonical cover into one 2-ECSS.
GlueResult glue_all(const MultiGraph& g, const TwoEdgeCover& h, const CreditLedger& ledger,
                    const GlueOptions& options = {});

}  // namespace tecss
