#pragma once

#include <cstdint>
#include <vector>

#include "tecss/cover.hpp"
#include "tecss/credits.hpp"

namespace tecss {

struct BridgeCoverOptions {
  // Ears are tried by increasing length (in host edges) up to this cap; the
  // shortest length that yields an acceptable move wins.
  int max_width = 6;
  int max_removals = 2;
  std::int64_t evaluation_cap = 50'000;  // candidate covers examined per iteration
};

struct BridgeCoverStep {
  EdgeSet added;
  EdgeSet removed;
  int bridges_before = 0;
  int bridges_after = 0;
  Cost cost_before;
  Cost cost_after;
};

struct BridgeCoverResult {
  TwoEdgeCover cover;
  CreditLedger ledger;
  std::vector<BridgeCoverStep> steps;
};

// Adds ears over bridges until none is left. Each step removes at least one
// bridge, keeps the cover canonical and triangle-free, and does not raise the
// cost. Throws Stuck (with the host and cover serialized in the diagnostics)
// when no such step exists within the search limits.
BridgeCoverResult cover_bridges(const MultiGraph& g, const TwoEdgeCover& h, const CreditLedger& ledger,
                                const BridgeCoverOptions& options = {});

}  // namespace tecss
