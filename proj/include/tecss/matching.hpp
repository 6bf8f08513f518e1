#pragma once

#include <vector>

#include "tecss/graph.hpp"

namespace tecss {

// Maximum matching among the edges with one endpoint in `side_a` and the other
// in `side_b` (the sides must be disjoint). Returns the matched edge ids.
std::vector<EdgeId> max_matching_across(const MultiGraph& g, const std::vector<VertexId>& side_a,
                                        const std::vector<VertexId>& side_b);

}  // namespace tecss
