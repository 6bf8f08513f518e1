#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tecss {

using VertexId = int;
using EdgeId = std::int64_t;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

struct Incidence {
  VertexId to;
  int edge_index;
};

// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

EdgeSet make_edge_set(std::vector<EdgeId> ids);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b);
bool set_contains(const EdgeSet& s, EdgeId id);

// Multigraph with stable edge ids. Edges are kept sorted by id; ids are never
// reused inside a lineage because derived graphs inherit next_edge_id().
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_at(int index) const { return edges_[index]; }
  const std::vector<Incidence>& incident(VertexId v) const { return adjacency_[v]; }
  EdgeId next_edge_id() const { return next_id_; }

  std::optional<int> index_of(EdgeId id) const;
  bool has_edge(EdgeId id) const { return index_of(id).has_value(); }
  const Edge& edge(EdgeId id) const;
  // Loops count twice.
  int degree(VertexId v) const;
  EdgeSet edge_ids() const;

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);
  // `id` must be larger than every id already present.
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v);
  void reserve_ids(EdgeId next);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  EdgeId next_id_ = 0;
};

// Same vertex set, only the listed edges.
MultiGraph edge_subgraph(const MultiGraph& g, const EdgeSet& keep);
MultiGraph remove_edges(const MultiGraph& g, const EdgeSet& drop);

struct InducedSubgraph {
  MultiGraph graph;
  std::vector<VertexId> to_host;    // local -> host
  std::vector<VertexId> from_host;  // host -> local, -1 if absent
};

// Vertices keep their relative order; edge ids are preserved.
InducedSubgraph induced_subgraph(const MultiGraph& g, const std::vector<VertexId>& vertices);

struct ContractionMap {
  MultiGraph result;
  std::vector<VertexId> vertex_map;  // host -> result
  VertexId merged = -1;              // image of the contracted set
};

// Contract `s` into one vertex. Edge count and ids are preserved; edges inside
// `s` become self-loops.
ContractionMap contract(const MultiGraph& g, const std::vector<VertexId>& s);

std::vector<VertexId> vertices_of(const MultiGraph& g, const EdgeSet& edges);
std::vector<int> degrees_in(const MultiGraph& g, const EdgeSet& edges);

}  // namespace tecss
