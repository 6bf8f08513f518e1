#include "tecss/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tecss {

namespace {

struct LowLink {
  std::vector<char> is_bridge;  // per edge index
  std::vector<char> is_cut;     // per vertex
  std::vector<std::vector<int>> pieces;  // edge indices of 2-vertex-connected pieces
};

LowLink run_lowlink(const MultiGraph& g, bool want_pieces, const std::vector<char>* mask = nullptr) {
  const int n = g.vertex_count();
  LowLink out;
  out.is_bridge.assign(g.edge_count(), 0);
  out.is_cut.assign(n, 0);
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    VertexId v;
    int parent_edge;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  std::vector<int> edge_stack;
  int timer = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const VertexId v = f.v;
      const auto& inc = g.incident(v);
      if (f.next < inc.size()) {
        const Incidence next = inc[f.next++];
        if (next.edge_index == f.parent_edge) continue;
        if (mask && !(*mask)[next.edge_index]) continue;
        if (g.edge_at(next.edge_index).is_loop()) continue;
        if (disc[next.to] == -1) {
          ++f.children;
          if (want_pieces) edge_stack.push_back(next.edge_index);
          disc[next.to] = low[next.to] = timer++;
          stack.push_back({next.to, next.edge_index, 0, 0});
        } else if (disc[next.to] < disc[v]) {
          low[v] = std::min(low[v], disc[next.to]);
          if (want_pieces) edge_stack.push_back(next.edge_index);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) out.is_cut[v] = 1;
        continue;
      }
      Frame& parent = stack.back();
      const VertexId u = parent.v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] > disc[u]) out.is_bridge[done.parent_edge] = 1;
      if (low[v] >= disc[u]) {
        if (parent.parent_edge != -1) out.is_cut[u] = 1;
        if (want_pieces) {
          std::vector<int> piece;
          while (!edge_stack.empty()) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            piece.push_back(e);
            if (e == done.parent_edge) break;
          }
          out.pieces.push_back(std::move(piece));
        }
      }
    }
  }
  return out;
}

std::vector<int> labels_avoiding(const MultiGraph& g, const std::vector<char>& skip_edge, int* count) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId x = queue[head];
      for (const auto& inc : g.incident(x)) {
        if (!skip_edge.empty() && skip_edge[inc.edge_index]) continue;
        if (label[inc.to] == -1) {
          label[inc.to] = next;
          queue.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

}  // namespace

std::vector<int> component_labels(const MultiGraph& g, int* count) { return labels_avoiding(g, {}, count); }

bool is_connected(const MultiGraph& g) {
  int count = 0;
  component_labels(g, &count);
  return count <= 1;
}

EdgeSet find_bridges(const MultiGraph& g) {
  LowLink ll = run_lowlink(g, false);
  EdgeSet out;
  for (int i = 0; i < g.edge_count(); ++i)
    if (ll.is_bridge[i]) out.push_back(g.edge_at(i).id);
  return out;
}

std::vector<VertexId> articulation_points(const MultiGraph& g) {
  LowLink ll = run_lowlink(g, false);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (ll.is_cut[v]) out.push_back(v);
  return out;
}

std::vector<EdgeSet> biconnected_components(const MultiGraph& g) {
  LowLink ll = run_lowlink(g, true);
  std::vector<EdgeSet> out;
  for (auto& piece : ll.pieces) {
    EdgeSet ids;
    for (int idx : piece) ids.push_back(g.edge_at(idx).id);
    out.push_back(make_edge_set(std::move(ids)));
  }
  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.front() < b.front(); });
  return out;
}

bool is_two_edge_connected(const MultiGraph& g) {
  if (!is_connected(g)) return false;
  LowLink ll = run_lowlink(g, false);
  return std::none_of(ll.is_bridge.begin(), ll.is_bridge.end(), [](char c) { return c != 0; });
}

bool is_two_edge_connected(const MultiGraph& g, const EdgeSet& subset) {
  return is_two_edge_connected(edge_subgraph(g, subset));
}

std::vector<int> two_edge_class_labels(const MultiGraph& g, int* count) {
  LowLink ll = run_lowlink(g, false);
  return labels_avoiding(g, ll.is_bridge, count);
}

bool is_two_edge_connected_mask(const MultiGraph& g, const std::vector<char>& mask) {
  int count = 0;
  std::vector<char> skip(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) skip[i] = !mask[i];
  labels_avoiding(g, skip, &count);
  if (count > 1) return false;
  LowLink ll = run_lowlink(g, false, &mask);
  return std::none_of(ll.is_bridge.begin(), ll.is_bridge.end(), [](char c) { return c != 0; });
}

std::vector<int> two_edge_class_labels_mask(const MultiGraph& g, const std::vector<char>& mask, int* count) {
  LowLink ll = run_lowlink(g, false, &mask);
  std::vector<char> skip(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) skip[i] = !mask[i] || ll.is_bridge[i];
  return labels_avoiding(g, skip, count);
}

std::vector<char> bridge_mask(const MultiGraph& g, const std::vector<char>& mask) {
  return run_lowlink(g, false, &mask).is_bridge;
}

MaskSummary summarize_mask(const MultiGraph& g, const std::vector<char>& mask) {
  MaskSummary out;
  LowLink ll = run_lowlink(g, false, &mask);
  std::vector<char> skip(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) skip[i] = !mask[i];
  std::vector<int> comp = labels_avoiding(g, skip, &out.components);
  std::vector<char> has_bridge(out.components, 0);
  for (int i = 0; i < g.edge_count(); ++i)
    if (ll.is_bridge[i]) {
      ++out.bridges;
      has_bridge[comp[g.edge_at(i).u]] = 1;
    }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (ll.is_cut[v] && !has_bridge[comp[v]]) ++out.cut_vertices_in_bridgeless;
  return out;
}

int BlockDecomposition::complex_count() const {
  return static_cast<int>(std::count(component_complex.begin(), component_complex.end(), true));
}

BlockDecomposition decompose(const MultiGraph& g) { return decompose(g, g.edge_ids()); }

BlockDecomposition decompose(const MultiGraph& g, const EdgeSet& h) {
  const MultiGraph sub = edge_subgraph(g, h);
  const int n = sub.vertex_count();
  BlockDecomposition d;
  LowLink ll = run_lowlink(sub, false);

  int comp_count = 0;
  std::vector<int> comp = component_labels(sub, &comp_count);
  int class_count = 0;
  std::vector<int> cls = labels_avoiding(sub, ll.is_bridge, &class_count);

  // Components ordered by smallest edge id, edgeless ones afterwards by vertex.
  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> comp_min_edge(comp_count, kNone);
  std::vector<VertexId> comp_min_vertex(comp_count, n);
  for (VertexId v = n - 1; v >= 0; --v) comp_min_vertex[comp[v]] = v;
  for (const auto& e : sub.edges()) comp_min_edge[comp[e.u]] = std::min(comp_min_edge[comp[e.u]], e.id);
  std::vector<int> comp_order(comp_count);
  std::iota(comp_order.begin(), comp_order.end(), 0);
  std::sort(comp_order.begin(), comp_order.end(), [&](int a, int b) {
    if (comp_min_edge[a] != comp_min_edge[b]) return comp_min_edge[a] < comp_min_edge[b];
    return comp_min_vertex[a] < comp_min_vertex[b];
  });
  std::vector<int> comp_rank(comp_count);
  for (int i = 0; i < comp_count; ++i) comp_rank[comp_order[i]] = i;

  d.components.assign(comp_count, {});
  d.component_edges.assign(comp_count, {});
  d.component_complex.assign(comp_count, false);
  d.component_of_vertex.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    d.component_of_vertex[v] = comp_rank[comp[v]];
    d.components[comp_rank[comp[v]]].push_back(v);
  }
  for (int i = 0; i < sub.edge_count(); ++i) {
    const Edge& e = sub.edge_at(i);
    int c = comp_rank[comp[e.u]];
    d.component_edges[c].push_back(e.id);
    if (ll.is_bridge[i]) {
      d.bridges.push_back(e.id);
      d.component_complex[c] = true;
    }
  }

  // Blocks: 2-edge classes that own at least one non-bridge edge.
  std::vector<EdgeSet> class_edges(class_count);
  for (int i = 0; i < sub.edge_count(); ++i) {
    const Edge& e = sub.edge_at(i);
    if (ll.is_bridge[i] || e.is_loop()) continue;
    class_edges[cls[e.u]].push_back(e.id);
  }
  std::vector<int> class_ids;
  for (int c = 0; c < class_count; ++c)
    if (!class_edges[c].empty()) class_ids.push_back(c);
  std::sort(class_ids.begin(), class_ids.end(),
            [&](int a, int b) { return class_edges[a].front() < class_edges[b].front(); });
  std::vector<std::vector<VertexId>> class_vertices(class_count);
  for (VertexId v = 0; v < n; ++v) class_vertices[cls[v]].push_back(v);

  std::vector<char> removed(n, 0);
  std::vector<VertexId> queue;
  for (int c : class_ids) {
    d.blocks.push_back(class_edges[c]);
    d.block_vertices.push_back(class_vertices[c]);
    int owner = d.component_of_vertex[class_vertices[c].front()];
    d.block_component.push_back(owner);
    bool pendant = false;
    if (d.component_complex[owner]) {
      // Pendant iff the component minus the block's vertices stays connected.
      for (VertexId v : class_vertices[c]) removed[v] = 1;
      VertexId start = -1;
      int remaining = 0;
      for (VertexId v : d.components[owner])
        if (!removed[v]) {
          ++remaining;
          if (start < 0) start = v;
        }
      int reached = 0;
      if (start >= 0) {
        std::vector<char> seen(n, 0);
        seen[start] = 1;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
          ++reached;
          for (const auto& inc : sub.incident(queue[head]))
            if (!removed[inc.to] && !seen[inc.to]) {
              seen[inc.to] = 1;
              queue.push_back(inc.to);
            }
        }
      }
      pendant = (reached == remaining);
      for (VertexId v : class_vertices[c]) removed[v] = 0;
    }
    d.pendant_flags.push_back(pendant);
  }

  for (VertexId v = 0; v < n; ++v)
    if (ll.is_cut[v]) d.cut_vertices.push_back(v);
  return d;
}

}  // namespace tecss
