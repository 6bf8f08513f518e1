#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the graph container.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tecss/graph.hpp"

namespace brute {

using tecss::EdgeId;
using tecss::EdgeSet;
using tecss::MultiGraph;
using tecss::VertexId;

// Spanning, connected and without bridges, by union-find with each edge removed.
bool is_2ecss(const MultiGraph& g, const EdgeSet& h);
bool is_connected_subset(const MultiGraph& g, const EdgeSet& h);
bool is_tf_cover(const MultiGraph& g, const EdgeSet& h);

// Calls `visit` on every subset of size k of the edges of g (ids ascending).
// Stops early when `visit` returns true; returns whether it did.
bool for_each_subset(const MultiGraph& g, int k, const std::function<bool(const EdgeSet&)>& visit);

// Smallest subset size satisfying `ok`, or nullopt.
std::optional<int> min_subset(const MultiGraph& g, const std::function<bool(const EdgeSet&)>& ok,
                              EdgeSet* witness = nullptr);

std::optional<int> min_2ecss(const MultiGraph& g, EdgeSet* witness = nullptr);
std::optional<int> min_tf_cover(const MultiGraph& g, EdgeSet* witness = nullptr);

// Every edge set of g that forms one simple cycle (a loop counts).
std::vector<EdgeSet> all_cycles(const MultiGraph& g);
bool is_simple_cycle(const MultiGraph& g, const EdgeSet& c);

// Minimum vertex cover of the edges crossing between the two sides.
int min_cross_vertex_cover(const MultiGraph& g, const std::vector<VertexId>& a, const std::vector<VertexId>& b);

// Connected components of g - removed, as sorted vertex lists.
std::vector<std::vector<VertexId>> components_without(const MultiGraph& g, const std::vector<VertexId>& removed);

// Random graphs.
MultiGraph random_graph(int n, double p, std::mt19937_64& rng);
// Random simple 2EC graph: a Hamiltonian cycle plus random chords.
MultiGraph random_2ec(int n, int extra, std::mt19937_64& rng);
// Random multigraph that may contain loops and parallel edges.
MultiGraph random_multigraph(int n, int m, std::mt19937_64& rng);

MultiGraph cycle(int n);
MultiGraph complete(int n);
MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace brute
