#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tecss/bridge_cover.hpp"
#include "tecss/cover.hpp"
#include "tecss/glue.hpp"
#include "tecss/graph.hpp"
#include "tecss/reduce.hpp"

namespace tecss {

enum class OracleMode { Off, Auto, Force };

const char* to_string(OracleMode mode);
OracleMode parse_oracle_mode(const std::string& text);

struct PipelineConfig {
  ReductionConfig reduction;
  OracleMode oracle = OracleMode::Auto;
  // Auto mode computes the optimum only up to this many vertices.
  int oracle_auto_max_vertices = 16;
  CoverOptions cover;
  BridgeCoverOptions bridges;
  std::int64_t glue_cycle_budget = 1'000'000;
  bool record_trace = false;
  bool record_timings = false;
  // Receives (label, graph, highlighted edges) for every phase snapshot.
  std::function<void(const std::string&, const MultiGraph&, const EdgeSet&)> snapshot;
};

struct PhaseError {
  std::string phase;
  std::string kind;
  std::string message;
  int leaf = -1;
  bool operator==(const PhaseError&) const = default;
};

struct BridgeStepRecord {
  int bridges_before = 0;
  int bridges_after = 0;
  int added = 0;
  int removed = 0;
  std::string cost_before;
  std::string cost_after;
  bool operator==(const BridgeStepRecord&) const = default;
};

struct GlueStepRecord {
  std::string kind;
  std::string rule;
  int added = 0;
  int removed = 0;
  std::string delta;
  std::int64_t delta_quarters = 0;
  int components_before = 0;
  int components_after = 0;
  bool operator==(const GlueStepRecord&) const = default;
};

// One structured leaf of the reduction. Sizes are edge counts; costs are
// exact quarter fractions.
struct LeafReport {
  int vertices = 0;
  int edges = 0;
  // "solved", "contract-hint" or "fallback".
  std::string outcome;
  int cover_size = 0;
  bool cover_certified = false;
  int canonical_size = 0;
  int canonical_components = 0;
  int canonical_bridges = 0;
  std::string canonical_cost;
  std::int64_t canonical_cost_quarters = 0;
  bool ledger_cost_within = true;
  bool ledger_complex_chain = true;
  std::vector<BridgeStepRecord> bridge_steps;
  std::string bridgeless_cost;
  std::vector<GlueStepRecord> glue_steps;
  std::string glue_initial_cost;
  std::string glue_final_cost;
  int final_size = 0;
  bool operator==(const LeafReport&) const = default;
};

struct TraceStepRecord {
  std::string kind;
  int n = 0;
  int m = 0;
  std::vector<int> children;
  EdgeSet own;
  EdgeSet stripped;
  int result_size = 0;
  std::string detail;
  bool operator==(const TraceStepRecord&) const = default;
};

struct RunReport {
  int schema = 1;
  // Input.
  int vertices = 0;
  int edges = 0;
  std::string fingerprint;
  // Configuration echo.
  std::string alpha;
  std::string epsilon;
  int enumeration_budget = 0;
  std::string oracle_mode;
  // Reduction.
  bool reduction_certified = false;
  bool large_three_cuts = true;
  int leaf_count = 0;
  std::map<std::string, int> step_counts;
  std::vector<TraceStepRecord> trace;
  std::vector<LeafReport> leaves;
  std::vector<PhaseError> errors;
  // Output.
  EdgeSet solution;
  int final_size = 0;
  bool verified = false;
  std::optional<std::int64_t> opt;
  bool opt_certified = false;
  std::optional<std::string> ratio;
  bool bound_applies = false;
  bool within_bound = true;
  std::string bound;
  bool certified = false;
  std::map<std::string, double> timings_ms;
  bool operator==(const RunReport&) const = default;
};

// reduce, then per structured leaf: cover, canonicalize, credits, bridge
// covering and gluing. Leaf failures with a contractible witness are fed back
// to the reduction; other leaf failures fall back to a minimal 2-ECSS and are
// listed in `errors`. Throws NotTwoEdgeConnected on infeasible input.
RunReport run_pipeline(const MultiGraph& g, const PipelineConfig& cfg);

// Single JSON document (sorted keys, two-space indent, trailing newline).
std::string to_json(const RunReport& report);
// Throws ParseError on malformed documents or an unknown schema.
RunReport report_from_json(const std::string& text);

}  // namespace tecss
