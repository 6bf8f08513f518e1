#include "tecss/graph.hpp"

#include <algorithm>

#include "tecss/errors.hpp"

namespace tecss {

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const EdgeSet& s, EdgeId id) { return std::binary_search(s.begin(), s.end(), id); }

MultiGraph::MultiGraph(int vertex_count) {
  if (vertex_count < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  adjacency_.resize(vertex_count);
}

std::optional<int> MultiGraph::index_of(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

const Edge& MultiGraph::edge(EdgeId id) const {
  auto idx = index_of(id);
  if (!idx) throw Error(ErrorKind::InvalidArgument, "unknown edge id " + std::to_string(id));
  return edges_[*idx];
}

int MultiGraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& inc : adjacency_[v]) d += edges_[inc.edge_index].is_loop() ? 2 : 1;
  return d;
}

EdgeSet MultiGraph::edge_ids() const {
  EdgeSet ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return ids;
}

VertexId MultiGraph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  EdgeId id = next_id_;
  add_edge_with_id(id, u, v);
  return id;
}

void MultiGraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  if (!edges_.empty() && id <= edges_.back().id)
    throw Error(ErrorKind::InvalidArgument, "edge ids must be added in increasing order");
  if (id < 0) throw Error(ErrorKind::InvalidArgument, "negative edge id");
  int index = edge_count();
  edges_.push_back({id, u, v});
  adjacency_[u].push_back({v, index});
  if (u != v) adjacency_[v].push_back({u, index});
  next_id_ = std::max(next_id_, id + 1);
}

void MultiGraph::reserve_ids(EdgeId next) { next_id_ = std::max(next_id_, next); }

MultiGraph edge_subgraph(const MultiGraph& g, const EdgeSet& keep) {
  MultiGraph out(g.vertex_count());
  for (const auto& e : g.edges())
    if (set_contains(keep, e.id)) out.add_edge_with_id(e.id, e.u, e.v);
  out.reserve_ids(g.next_edge_id());
  return out;
}

MultiGraph remove_edges(const MultiGraph& g, const EdgeSet& drop) {
  MultiGraph out(g.vertex_count());
  for (const auto& e : g.edges())
    if (!set_contains(drop, e.id)) out.add_edge_with_id(e.id, e.u, e.v);
  out.reserve_ids(g.next_edge_id());
  return out;
}

InducedSubgraph induced_subgraph(const MultiGraph& g, const std::vector<VertexId>& vertices) {
  InducedSubgraph sub;
  sub.from_host.assign(g.vertex_count(), -1);
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    sub.from_host[v] = static_cast<VertexId>(sub.to_host.size());
    sub.to_host.push_back(v);
  }
  sub.graph = MultiGraph(static_cast<int>(sorted.size()));
  for (const auto& e : g.edges()) {
    VertexId a = sub.from_host[e.u], b = sub.from_host[e.v];
    if (a >= 0 && b >= 0) sub.graph.add_edge_with_id(e.id, a, b);
  }
  sub.graph.reserve_ids(g.next_edge_id());
  return sub;
}

ContractionMap contract(const MultiGraph& g, const std::vector<VertexId>& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "contracting an empty vertex set");
  std::vector<char> in_s(g.vertex_count(), 0);
  for (VertexId v : s) in_s.at(v) = 1;
  ContractionMap map;
  map.vertex_map.assign(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_s[v]) {
      if (map.merged < 0) map.merged = next++;
      map.vertex_map[v] = map.merged;
    } else {
      map.vertex_map[v] = next++;
    }
  }
  map.result = MultiGraph(next);
  for (const auto& e : g.edges()) map.result.add_edge_with_id(e.id, map.vertex_map[e.u], map.vertex_map[e.v]);
  map.result.reserve_ids(g.next_edge_id());
  return map;
}

std::vector<VertexId> vertices_of(const MultiGraph& g, const EdgeSet& edges) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    seen[e.u] = seen[e.v] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::vector<int> degrees_in(const MultiGraph& g, const EdgeSet& edges) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

}  // namespace tecss
