#include "tecss/cycles.hpp"

#include <algorithm>

#include "tecss/errors.hpp"

namespace tecss {

namespace {

class CycleSearch {
 public:
  CycleSearch(const MultiGraph& g, const EdgeSet& required, std::int64_t budget)
      : g_(g), budget_(budget), in_required_(g.edge_count(), 0), used_(g.edge_count(), 0),
        on_path_(g.vertex_count(), 0), required_at_(g.vertex_count(), 0) {
    for (EdgeId id : required) {
      int idx = index(id);
      in_required_[idx] = 1;
      const Edge& e = g.edge_at(idx);
      ++required_at_[e.u];
      if (!e.is_loop()) ++required_at_[e.v];
      required_idx_.push_back(idx);
    }
  }

  std::optional<std::vector<EdgeId>> run() {
    if (required_idx_.empty()) return any_cycle();
    for (int idx : required_idx_) {
      const Edge& e = g_.edge_at(idx);
      if (e.is_loop()) {
        if (required_idx_.size() == 1) return std::vector<EdgeId>{e.id};
        return std::nullopt;
      }
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (required_at_[v] > 2) return std::nullopt;
    return from_edge(required_idx_.front());
  }

 private:
  int index(EdgeId id) const {
    auto idx = g_.index_of(id);
    if (!idx) throw Error(ErrorKind::InvalidArgument, "unknown edge id " + std::to_string(id));
    return *idx;
  }

  std::optional<std::vector<EdgeId>> any_cycle() {
    // Try each edge as the anchor in id order.
    for (int idx = 0; idx < g_.edge_count(); ++idx) {
      const Edge& e = g_.edge_at(idx);
      if (e.is_loop()) return std::vector<EdgeId>{e.id};
      in_required_[idx] = 1;
      ++required_at_[e.u];
      ++required_at_[e.v];
      required_idx_.assign(1, idx);
      auto found = from_edge(idx);
      in_required_[idx] = 0;
      --required_at_[e.u];
      --required_at_[e.v];
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<std::vector<EdgeId>> from_edge(int anchor) {
    const Edge& e = g_.edge_at(anchor);
    start_ = e.u;
    remaining_ = static_cast<int>(required_idx_.size()) - 1;
    used_[anchor] = 1;
    on_path_[e.u] = on_path_[e.v] = 1;
    path_.assign(1, e.id);
    if (extend(e.v, anchor)) return path_;
    used_[anchor] = 0;
    on_path_[e.u] = on_path_[e.v] = 0;
    return std::nullopt;
  }

  // Every unused required edge still has both endpoints reachable from x
  // without touching the path (the start vertex counts as reachable).
  bool reachable_ok(VertexId x) {
    if (remaining_ == 0) return true;
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<VertexId> queue{x};
    seen[x] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId y = queue[head];
      for (const auto& inc : g_.incident(y)) {
        if (seen[inc.to]) continue;
        if (on_path_[inc.to] && inc.to != start_) continue;
        seen[inc.to] = 1;
        if (inc.to != start_) queue.push_back(inc.to);
      }
    }
    if (!seen[start_]) return false;
    for (int idx : required_idx_) {
      if (used_[idx]) continue;
      const Edge& r = g_.edge_at(idx);
      if (!seen[r.u] || !seen[r.v]) return false;
    }
    return true;
  }

  bool extend(VertexId x, int arrived_by) {
    if (++expansions_ > budget_)
      throw Error(ErrorKind::BudgetExceeded, "cycle search exceeded " + std::to_string(budget_) + " expansions");
    // A vertex with an unused required edge must leave through it.
    int forced = -1;
    for (const auto& inc : g_.incident(x)) {
      if (inc.edge_index == arrived_by || !in_required_[inc.edge_index] || used_[inc.edge_index]) continue;
      if (forced != -1) return false;
      forced = inc.edge_index;
    }
    if (forced != -1) return step(x, forced);
    if (!reachable_ok(x)) return false;
    // Parallel optional edges are interchangeable: try one per neighbour.
    VertexId last_to = -1;
    std::vector<std::pair<VertexId, int>> options;
    for (const auto& inc : g_.incident(x)) {
      if (inc.edge_index == arrived_by || in_required_[inc.edge_index]) continue;
      if (g_.edge_at(inc.edge_index).is_loop()) continue;
      options.push_back({inc.to, inc.edge_index});
    }
    std::sort(options.begin(), options.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return g_.edge_at(a.second).id < g_.edge_at(b.second).id;
    });
    for (const auto& [to, idx] : options) {
      if (to == last_to) continue;
      last_to = to;
      if (step(x, idx)) return true;
    }
    return false;
  }

  bool step(VertexId x, int idx) {
    const Edge& e = g_.edge_at(idx);
    VertexId y = e.other(x);
    if (y == start_) {
      if (remaining_ - (in_required_[idx] ? 1 : 0) != 0) return false;
      path_.push_back(e.id);
      return true;
    }
    if (on_path_[y]) return false;
    used_[idx] = 1;
    on_path_[y] = 1;
    if (in_required_[idx]) --remaining_;
    path_.push_back(e.id);
    if (extend(y, idx)) return true;
    path_.pop_back();
    if (in_required_[idx]) ++remaining_;
    on_path_[y] = 0;
    used_[idx] = 0;
    return false;
  }

  const MultiGraph& g_;
  std::int64_t budget_;
  std::int64_t expansions_ = 0;
  std::vector<char> in_required_, used_, on_path_;
  std::vector<int> required_at_;
  std::vector<int> required_idx_;
  std::vector<EdgeId> path_;
  VertexId start_ = -1;
  int remaining_ = 0;
};

}  // namespace

std::optional<std::vector<EdgeId>> find_cycle_through_edges(const MultiGraph& g, const EdgeSet& required,
                                                            std::int64_t budget) {
  if (required.size() > 4) throw Error(ErrorKind::InvalidArgument, "at most 4 required edges");
  CycleSearch search(g, make_edge_set(required), budget);
  return search.run();
}

std::optional<std::vector<VertexId>> hamiltonian_path_between(const MultiGraph& g, VertexId u, VertexId v) {
  const int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  if (u == v) {
    if (n == 1) return std::vector<VertexId>{u};
    return std::nullopt;
  }
  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId x = 0; x < n; ++x) {
    for (const auto& inc : g.incident(x))
      if (inc.to != x) nbrs[x].push_back(inc.to);
    std::sort(nbrs[x].begin(), nbrs[x].end());
    nbrs[x].erase(std::unique(nbrs[x].begin(), nbrs[x].end()), nbrs[x].end());
  }
  std::vector<char> seen(n, 0);
  std::vector<VertexId> path{u};
  seen[u] = 1;
  auto dfs = [&](auto&& self, VertexId x) -> bool {
    if (static_cast<int>(path.size()) == n) return x == v;
    if (x == v) return false;
    for (VertexId y : nbrs[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      path.push_back(y);
      if (self(self, y)) return true;
      path.pop_back();
      seen[y] = 0;
    }
    return false;
  };
  if (dfs(dfs, u)) return path;
  return std::nullopt;
}

std::optional<std::vector<EdgeId>> shortest_path(const MultiGraph& g, VertexId s, VertexId t, EdgeId skip,
                                                 const std::vector<char>& blocked) {
  const int n = g.vertex_count();
  std::vector<int> via(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue{s};
  seen[s] = 1;
  for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
    VertexId x = queue[head];
    // Neighbours in edge id order keep ties deterministic.
    for (const auto& inc : g.incident(x)) {
      const Edge& e = g.edge_at(inc.edge_index);
      if (e.id == skip || e.is_loop() || seen[inc.to]) continue;
      if (!blocked.empty() && blocked[inc.to] && inc.to != t) continue;
      seen[inc.to] = 1;
      via[inc.to] = inc.edge_index;
      queue.push_back(inc.to);
    }
  }
  if (!seen[t]) return std::nullopt;
  std::vector<EdgeId> out;
  for (VertexId x = t; x != s;) {
    const Edge& e = g.edge_at(via[x]);
    out.push_back(e.id);
    x = e.other(x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<std::vector<EdgeId>> shortest_cycle_through_vertex(const MultiGraph& g, VertexId a) {
  std::optional<std::vector<EdgeId>> best;
  std::vector<int> order;
  for (const auto& inc : g.incident(a))
    if (!g.edge_at(inc.edge_index).is_loop()) order.push_back(inc.edge_index);
  std::sort(order.begin(), order.end());
  for (int idx : order) {
    const Edge& e = g.edge_at(idx);
    auto back = shortest_path(g, e.other(a), a, e.id);
    if (!back) continue;
    if (best && back->size() + 1 >= best->size()) continue;
    std::vector<EdgeId> cycle{e.id};
    cycle.insert(cycle.end(), back->begin(), back->end());
    best = std::move(cycle);
  }
  return best;
}

}  // namespace tecss
