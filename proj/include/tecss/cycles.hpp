#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tecss/graph.hpp"

namespace tecss {

// A simple cycle that uses every edge of `required` (at most 4 edges), as an
// edge list in traversal order starting with the smallest required edge.
// With `required` empty any cycle is accepted. Throws BudgetExceeded when the
// search expands more than `budget` nodes without a definitive answer.
std::optional<std::vector<EdgeId>> find_cycle_through_edges(const MultiGraph& g, const EdgeSet& required,
                                                            std::int64_t budget = 1'000'000);

// Hamiltonian path from u to v as a vertex sequence. Exhaustive; the first
// path in lexicographic vertex order is returned.
std::optional<std::vector<VertexId>> hamiltonian_path_between(const MultiGraph& g, VertexId u, VertexId v);

// Shortest cycle through vertex a (loops ignored, parallel edges give cycles of
// length 2). Ties go to the smallest first edge id, then BFS order.
std::optional<std::vector<EdgeId>> shortest_cycle_through_vertex(const MultiGraph& g, VertexId a);

// Shortest path from s to t avoiding the edge `skip` (by id; -1 for none) and
// the vertices flagged in `blocked`. Returns edge ids in order.
std::optional<std::vector<EdgeId>> shortest_path(const MultiGraph& g, VertexId s, VertexId t, EdgeId skip,
                                                 const std::vector<char>& blocked = {});

}  // namespace tecss
