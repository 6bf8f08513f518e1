#pragma once

#include <cstdint>
#include <optional>

#include "tecss/graph.hpp"

namespace tecss {

inline constexpr std::int64_t kDefaultOracleBudget = 5'000'000;

struct ExactResult {
  std::int64_t value = 0;
  EdgeSet witness;
  std::int64_t nodes_explored = 0;
  // False when the node budget ran out; value/witness are then the best found.
  bool certified = false;
};

// Minimum 2-edge-connected spanning subgraph. Throws Infeasible when g is not
// 2-edge-connected.
std::optional<ExactResult> exact_min_2ecss(const MultiGraph& g, std::int64_t budget = kDefaultOracleBudget);

// Minimum number of extra edges X such that fixed ∪ X is 2-edge-connected and
// spanning. `value` counts X only; `witness` is fixed ∪ X.
std::optional<ExactResult> exact_min_2ecss_with_fixed(const MultiGraph& g, const EdgeSet& fixed,
                                                      std::int64_t budget = kDefaultOracleBudget);

// A minimal 2-ECSS contained in `start` (which must be 2EC spanning): edges are
// dropped greedily, those outside `keep_first` before those inside it.
EdgeSet greedy_minimal_2ecss(const MultiGraph& g, const EdgeSet& start, const EdgeSet& keep_first = {});

// Spanning, connected and bridgeless. Independent of the connectivity module.
bool verify_2ecss(const MultiGraph& g, const EdgeSet& h);

// Minimum triangle-free 2-edge cover by edge-order branching. Self-loops are
// never used. Throws Infeasible if no such cover exists.
std::optional<ExactResult> exact_min_tf_cover(const MultiGraph& g, std::int64_t budget = kDefaultOracleBudget);

}  // namespace tecss
