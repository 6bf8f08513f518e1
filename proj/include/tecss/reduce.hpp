#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tecss/contractible.hpp"
#include "tecss/graph.hpp"
#include "tecss/oracle.hpp"
#include "tecss/rational.hpp"

namespace tecss {

struct ReductionConfig {
  Rational alpha{5, 4};
  Rational epsilon{1, 24};
  // n0: largest vertex count solved exactly.
  int enumeration_budget = 12;
  std::int64_t oracle_budget = kDefaultOracleBudget;
  // Contractible subgraphs are searched up to min(2/epsilon, this) vertices.
  int contractible_max_vertices = 10;
  // Caps on the side-solution enumeration behind a large 3-vertex cut.
  int typed_solution_cap = 96;
  int typed_oracle_calls = 1500;
  bool large_three_cuts = true;
  // When false, any epsilon in (0, 1) is accepted so that the size thresholds
  // can be exercised on small graphs; such runs are never certified.
  bool check_parameters = true;
};

// Throws InvalidArgument unless alpha >= 5/4 and 0 < epsilon <= 1/24.
void validate(const ReductionConfig& cfg);

enum class SolutionType { A, B1, B2, C1, C2, C3 };

const char* to_string(SolutionType t);

// Types compatible on the other side of the cut, in preference order.
std::vector<SolutionType> compatible_types(SolutionType t);

// Type of h (edges of g) with respect to the cut. Every vertex of g belongs to
// the picture; isolated vertices are single super-nodes. Throws Untypeable.
SolutionType classify_solution_type(const MultiGraph& g, const EdgeSet& h, const std::array<VertexId, 3>& cut);

// Minimum edge set of g of type t accepted by `compatible`, by exhaustive
// search in order of size then edge ids. Throws BudgetExceeded after `budget`
// visited subsets.
std::optional<EdgeSet> enumerate_min_typed_subgraph(const MultiGraph& g, const std::array<VertexId, 3>& cut,
                                                    SolutionType t,
                                                    const std::function<bool(const EdgeSet&)>& compatible,
                                                    std::int64_t budget = 5'000'000);

// Smallest F of at most max_size edges outside h with h + F 2EC spanning; ties
// by lexicographic edge ids.
std::optional<EdgeSet> find_patch(const MultiGraph& g, const EdgeSet& h, int max_size);

// Edges whose endpoints form a 2-vertex cut, in id order.
EdgeSet irrelevant_edges(const MultiGraph& g);

struct LeafResult {
  EdgeSet edges;
  // Set when the leaf solver found a contractible subgraph instead.
  std::optional<ContractibleCertificate> contract_hint;
  std::string note;
};

using StructuredSolver = std::function<LeafResult(const MultiGraph&)>;

struct TraceStep {
  std::string kind;
  int n = 0;
  int m = 0;
  std::vector<int> children;
  EdgeSet own;
  EdgeSet stripped;
  EdgeSet result;
  std::string detail;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;  // steps[0] is the root

  // union(children results) + own - stripped == result for every step.
  bool replay_ok() const;
  int count(const std::string& kind) const;
};

struct ReductionResult {
  EdgeSet edges;
  ReductionTrace trace;
  // Cleared whenever a step runs outside the proven regime.
  bool certified = true;
  int leaves = 0;
};

// Solves every exact-guard instance with the oracle and every other leaf with
// `solver`; the output is verified to be a 2-ECSS of g at every step.
ReductionResult reduce(const MultiGraph& g, const ReductionConfig& cfg, const StructuredSolver& solver);

// A solver that uses the exact oracle (falling back to its best found set).
LeafResult exact_leaf_solver(const MultiGraph& g);

struct ApproxCheck {
  std::int64_t size = 0;
  std::optional<std::int64_t> opt;
  std::optional<double> ratio;
  bool bound_applies = false;
  bool within_bound = true;
  std::string bound;  // exact value of alpha*opt + 4*eps*n - 4 when it applies
};

ApproxCheck verify_approx_bound(const ReductionResult& result, int vertex_count, const ReductionConfig& cfg,
                                std::optional<std::int64_t> opt);

}  // namespace tecss
