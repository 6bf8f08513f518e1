#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tecss/graph.hpp"
#include "tecss/rational.hpp"

namespace tecss {

enum class ContractibleBasis { ForcedDegree, Exact };

const char* to_string(ContractibleBasis basis);

struct ContractibleCertificate {
  std::vector<VertexId> vertices;
  // A 2EC spanning subgraph of G[vertices] (the subgraph that gets contracted).
  EdgeSet subgraph;
  // Every 2-ECSS of the host uses at least this many edges inside `vertices`.
  std::int64_t inside_lower_bound = 0;
  ContractibleBasis basis = ContractibleBasis::ForcedDegree;
};

// Edges of G[S] every 2-ECSS must contain in number: the minimum edge set of
// G[S] that gives each vertex of S whose whole neighbourhood lies in S degree 2.
std::int64_t forced_inside_edges(const MultiGraph& g, const std::vector<VertexId>& s);

// Tries to certify that the minimum 2-ECSS of G[S] is alpha-contractible.
// Absence only means no certificate was found.
std::optional<ContractibleCertificate> certify_contractible(const MultiGraph& g, std::vector<VertexId> s,
                                                            Rational alpha, std::int64_t oracle_budget,
                                                            int exact_edge_limit = 12);

// Searches candidate vertex sets with at most `max_vertices` vertices, built as
// closed neighbourhoods of up to four low-degree vertices that lie within
// distance two of each other. Returns the first certified one.
std::optional<ContractibleCertificate> find_contractible_certificate(const MultiGraph& g, Rational alpha,
                                                                     int max_vertices, std::int64_t oracle_budget);

}  // namespace tecss
