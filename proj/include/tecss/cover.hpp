#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tecss/connectivity.hpp"
#include "tecss/graph.hpp"

namespace tecss {

enum class ComponentClass { Cycle, Large, Complex, Other };

const char* to_string(ComponentClass c);

// An edge subset of a host graph with its decomposition cached.
struct TwoEdgeCover {
  EdgeSet edges;
  BlockDecomposition decomposition;
  std::vector<ComponentClass> classes;  // per component of the decomposition
  bool certified_minimum = false;

  std::size_t size() const { return edges.size(); }
  int bridge_count() const { return static_cast<int>(decomposition.bridges.size()); }
  int component_count() const { return static_cast<int>(decomposition.components.size()); }
};

TwoEdgeCover make_cover(const MultiGraph& g, EdgeSet edges, bool certified_minimum = false);

// Every vertex has degree at least 2 in h, no loops, and no component is a triangle.
bool is_triangle_free_cover(const MultiGraph& g, const EdgeSet& h);

struct CoverOptions {
  // Exact branch and bound up to this many vertices; heuristic beyond.
  int exact_max_vertices = 40;
  std::int64_t node_budget = 2'000'000;
};

// Minimum triangle-free 2-edge cover. Throws Infeasible if some vertex has
// degree below 2 or no triangle-free cover exists.
TwoEdgeCover min_triangle_free_cover(const MultiGraph& g, const CoverOptions& options = {});

// Greedy cover used as the upper bound and on large inputs.
EdgeSet heuristic_triangle_free_cover(const MultiGraph& g);

enum class ViolationKind { SmallNonCycleComponent, PendantBlockUnder6, NonPendantBlockUnder4 };

const char* to_string(ViolationKind kind);

struct CanonicalViolation {
  ViolationKind kind;
  int index;  // component index for SmallNonCycleComponent, block index otherwise
  std::vector<VertexId> vertices;
};

std::vector<CanonicalViolation> check_canonical(const TwoEdgeCover& h);

struct CanonicalizeStats {
  int iterations = 0;
};

// The local search alone: returns the fixpoint without checking it.
TwoEdgeCover improve_cover(const MultiGraph& g, const TwoEdgeCover& h, CanonicalizeStats* stats = nullptr);

// Local search with swaps |F_A| <= |F_R| <= 2 until no move improves
// (edges, components, bridges, cut vertices in bridgeless components).
// Throws NotCanonical if the fixpoint still violates the canonical form.
TwoEdgeCover canonicalize(const MultiGraph& g, const TwoEdgeCover& h, CanonicalizeStats* stats = nullptr);

}  // namespace tecss
