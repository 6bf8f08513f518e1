#include "tecss/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tecss/errors.hpp"

namespace tecss {

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Cycle: return "Cycle";
    case ComponentClass::Large: return "Large";
    case ComponentClass::Complex: return "Complex";
    case ComponentClass::Other: return "Other";
  }
  return "Unknown";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SmallNonCycleComponent: return "SmallNonCycleComponent";
    case ViolationKind::PendantBlockUnder6: return "PendantBlockUnder6";
    case ViolationKind::NonPendantBlockUnder4: return "NonPendantBlockUnder4";
  }
  return "Unknown";
}

TwoEdgeCover make_cover(const MultiGraph& g, EdgeSet edges, bool certified_minimum) {
  TwoEdgeCover h;
  h.edges = make_edge_set(std::move(edges));
  h.decomposition = decompose(g, h.edges);
  h.certified_minimum = certified_minimum;
  const auto& d = h.decomposition;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const std::size_t nv = d.components[c].size(), ne = d.component_edges[c].size();
    ComponentClass cls = ComponentClass::Other;
    if (d.component_complex[c])
      cls = ComponentClass::Complex;
    else if (ne == nv && nv >= 4 && nv <= 7)
      cls = ComponentClass::Cycle;  // a bridgeless connected graph with |E| = |V| is a cycle
    else if (ne >= 8)
      cls = ComponentClass::Large;
    h.classes.push_back(cls);
  }
  return h;
}

namespace {

// Per-component vertex and edge counts of a masked subgraph.
struct MaskComponents {
  std::vector<int> label;
  std::vector<int> vertices, edges;
  int count = 0;
};

MaskComponents mask_components(const MultiGraph& g, const std::vector<char>& mask) {
  const int n = g.vertex_count();
  MaskComponents mc;
  mc.label.assign(n, -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (mc.label[s] != -1) continue;
    int c = mc.count++;
    mc.vertices.push_back(0);
    mc.edges.push_back(0);
    mc.label[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      ++mc.vertices[c];
      for (const auto& inc : g.incident(x)) {
        if (!mask[inc.edge_index] || mc.label[inc.to] != -1) continue;
        mc.label[inc.to] = c;
        stack.push_back(inc.to);
      }
    }
  }
  for (int i = 0; i < g.edge_count(); ++i)
    if (mask[i]) ++mc.edges[mc.label[g.edge_at(i).u]];
  return mc;
}

bool is_triangle(const MaskComponents& mc, int c) { return mc.vertices[c] == 3 && mc.edges[c] == 3; }

}  // namespace

bool is_triangle_free_cover(const MultiGraph& g, const EdgeSet& h) {
  std::vector<char> mask(g.edge_count(), 0);
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId id : h) {
    auto idx = g.index_of(id);
    if (!idx) return false;
    const Edge& e = g.edge_at(*idx);
    if (e.is_loop()) return false;
    mask[*idx] = 1;
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int d : deg)
    if (d < 2) return false;
  MaskComponents mc = mask_components(g, mask);
  for (int c = 0; c < mc.count; ++c)
    if (is_triangle(mc, c)) return false;
  return true;
}

namespace {

void check_cover_input(const MultiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int d = 0;
    for (const auto& inc : g.incident(v))
      if (inc.to != v) ++d;
    if (d < 2)
      throw Error(ErrorKind::Infeasible, "vertex " + std::to_string(v) + " has fewer than two non-loop edges", {v});
  }
}

// Removes edges whose endpoints both keep degree >= 3, highest id first,
// unless that leaves a triangle component.
void prune_cover(const MultiGraph& g, std::vector<char>& mask, std::vector<int>& deg) {
  for (int i = g.edge_count() - 1; i >= 0; --i) {
    if (!mask[i]) continue;
    const Edge& e = g.edge_at(i);
    if (deg[e.u] < 3 || deg[e.v] < 3) continue;
    mask[i] = 0;
    MaskComponents mc = mask_components(g, mask);
    if (is_triangle(mc, mc.label[e.u]) || is_triangle(mc, mc.label[e.v])) {
      mask[i] = 1;
      continue;
    }
    --deg[e.u];
    --deg[e.v];
  }
}

}  // namespace

EdgeSet heuristic_triangle_free_cover(const MultiGraph& g) {
  check_cover_input(g);
  const int n = g.vertex_count();
  std::vector<char> mask(g.edge_count(), 0);
  std::vector<int> deg(n, 0);
  auto add = [&](int i) {
    mask[i] = 1;
    ++deg[g.edge_at(i).u];
    ++deg[g.edge_at(i).v];
  };
  // Serve the most constrained short vertex first, preferring partners that
  // are short as well.
  while (true) {
    VertexId pick = -1;
    int pick_options = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (deg[v] >= 2) continue;
      int options = 0;
      for (const auto& inc : g.incident(v))
        if (!mask[inc.edge_index] && inc.to != v) ++options;
      if (pick == -1 || options < pick_options) {
        pick = v;
        pick_options = options;
      }
    }
    if (pick == -1) break;
    int chosen = -1;
    for (const auto& inc : g.incident(pick)) {
      if (mask[inc.edge_index] || inc.to == pick) continue;
      if (chosen == -1 || (deg[inc.to] < 2 && deg[g.edge_at(chosen).other(pick)] >= 2)) chosen = inc.edge_index;
    }
    if (chosen == -1) throw Error(ErrorKind::Infeasible, "no triangle-free 2-edge cover", {pick});
    add(chosen);
  }
  prune_cover(g, mask, deg);
  // Break triangle components with an edge leaving them.
  while (true) {
    MaskComponents mc = mask_components(g, mask);
    int tri = -1;
    for (int c = 0; c < mc.count && tri == -1; ++c)
      if (is_triangle(mc, c)) tri = c;
    if (tri == -1) break;
    int chosen = -1;
    for (int i = 0; i < g.edge_count() && chosen == -1; ++i) {
      const Edge& e = g.edge_at(i);
      if (mask[i] || e.is_loop()) continue;
      if ((mc.label[e.u] == tri) != (mc.label[e.v] == tri)) {
        int other = mc.label[e.u] == tri ? mc.label[e.v] : mc.label[e.u];
        if (is_triangle(mc, other)) chosen = i;
      }
    }
    for (int i = 0; i < g.edge_count() && chosen == -1; ++i) {
      const Edge& e = g.edge_at(i);
      if (!mask[i] && !e.is_loop() && (mc.label[e.u] == tri || mc.label[e.v] == tri)) chosen = i;
    }
    if (chosen == -1) throw Error(ErrorKind::Infeasible, "no triangle-free 2-edge cover");
    add(chosen);
  }
  prune_cover(g, mask, deg);
  EdgeSet out;
  for (int i = 0; i < g.edge_count(); ++i)
    if (mask[i]) out.push_back(g.edge_at(i).id);
  return out;
}

namespace {

// Exact search: branch on the short vertex with the fewest free edges; once
// every vertex has degree 2, branch on the edges leaving a triangle component.
class CoverSearch {
 public:
  CoverSearch(const MultiGraph& g, std::int64_t budget)
      : g_(g), n_(g.vertex_count()), m_(g.edge_count()), budget_(budget), status_(m_, kFree), deg_in_(n_, 0),
        deg_avail_(n_, 0) {
    for (int i = 0; i < m_; ++i) {
      const Edge& e = g.edge_at(i);
      if (e.is_loop()) {
        status_[i] = kOut;
        continue;
      }
      ++deg_avail_[e.u];
      ++deg_avail_[e.v];
    }
  }

  void run(const EdgeSet& upper) {
    best_ = static_cast<std::int64_t>(upper.size());
    best_set_ = upper;
    search();
  }

  const EdgeSet& best() const { return best_set_; }
  bool complete() const { return !aborted_; }

 private:
  static constexpr char kFree = 0, kIn = 1, kOut = 2;

  void set(int i, char s) {
    const Edge& e = g_.edge_at(i);
    trail_.push_back({i, status_[i]});
    status_[i] = s;
    if (s == kIn) {
      ++deg_in_[e.u];
      ++deg_in_[e.v];
      ++count_;
    } else {
      --deg_avail_[e.u];
      --deg_avail_[e.v];
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [i, old] = trail_.back();
      trail_.pop_back();
      const Edge& e = g_.edge_at(i);
      if (status_[i] == kIn) {
        --deg_in_[e.u];
        --deg_in_[e.v];
        --count_;
      } else {
        ++deg_avail_[e.u];
        ++deg_avail_[e.v];
      }
      status_[i] = old;
    }
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 0; v < n_; ++v) {
        if (deg_avail_[v] < 2) return false;
        if (deg_avail_[v] == 2 && deg_in_[v] < 2)
          for (const auto& inc : g_.incident(v))
            if (status_[inc.edge_index] == kFree) {
              set(inc.edge_index, kIn);
              changed = true;
            }
      }
    }
    return true;
  }

  void search() {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::size_t mark = trail_.size();
    if (!propagate()) {
      undo_to(mark);
      return;
    }
    std::int64_t deficit = 0;
    VertexId pick = -1;
    int pick_free = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (deg_in_[v] >= 2) continue;
      deficit += 2 - deg_in_[v];
      int free_count = deg_avail_[v] - deg_in_[v];
      if (pick == -1 || free_count < pick_free) {
        pick = v;
        pick_free = free_count;
      }
    }
    if (count_ + (deficit + 1) / 2 >= best_) {
      undo_to(mark);
      return;
    }
    std::vector<int> options;
    if (pick != -1) {
      for (const auto& inc : g_.incident(pick))
        if (status_[inc.edge_index] == kFree) options.push_back(inc.edge_index);
      std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
        return (deg_in_[g_.edge_at(a).other(pick)] < 2) > (deg_in_[g_.edge_at(b).other(pick)] < 2);
      });
    } else {
      std::vector<char> mask(m_);
      for (int i = 0; i < m_; ++i) mask[i] = status_[i] == kIn;
      MaskComponents mc = mask_components(g_, mask);
      int tri = -1;
      for (int c = 0; c < mc.count && tri == -1; ++c)
        if (is_triangle(mc, c)) tri = c;
      if (tri == -1) {
        best_ = count_;
        best_set_.clear();
        for (int i = 0; i < m_; ++i)
          if (mask[i]) best_set_.push_back(g_.edge_at(i).id);
        undo_to(mark);
        return;
      }
      if (count_ + 1 >= best_) {
        undo_to(mark);
        return;
      }
      for (int i = 0; i < m_; ++i) {
        const Edge& e = g_.edge_at(i);
        if (status_[i] == kFree && (mc.label[e.u] == tri || mc.label[e.v] == tri)) options.push_back(i);
      }
    }
    for (int option : options) {
      std::size_t before = trail_.size();
      set(option, kIn);
      search();
      undo_to(before);
      if (aborted_) break;
      set(option, kOut);
      const Edge& e = g_.edge_at(option);
      if (deg_avail_[e.u] < 2 || deg_avail_[e.v] < 2) break;
    }
    undo_to(mark);
  }

  const MultiGraph& g_;
  int n_, m_;
  std::int64_t budget_;
  std::vector<char> status_;
  std::vector<int> deg_in_, deg_avail_;
  std::vector<std::pair<int, char>> trail_;
  std::int64_t count_ = 0, best_ = 0, nodes_ = 0;
  EdgeSet best_set_;
  bool aborted_ = false;
};

}  // namespace

TwoEdgeCover min_triangle_free_cover(const MultiGraph& g, const CoverOptions& options) {
  EdgeSet upper = heuristic_triangle_free_cover(g);
  if (g.vertex_count() > options.exact_max_vertices) return make_cover(g, upper, false);
  CoverSearch search(g, options.node_budget);
  search.run(upper);
  return make_cover(g, search.best(), search.complete());
}

std::vector<CanonicalViolation> check_canonical(const TwoEdgeCover& h) {
  std::vector<CanonicalViolation> out;
  const auto& d = h.decomposition;
  for (std::size_t c = 0; c < h.classes.size(); ++c)
    if (h.classes[c] == ComponentClass::Other)
      out.push_back({ViolationKind::SmallNonCycleComponent, static_cast<int>(c), d.components[c]});
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (!d.component_complex[d.block_component[b]]) continue;
    if (d.pendant_flags[b] && d.blocks[b].size() < 6)
      out.push_back({ViolationKind::PendantBlockUnder6, static_cast<int>(b), d.block_vertices[b]});
    if (!d.pendant_flags[b] && d.blocks[b].size() < 4)
      out.push_back({ViolationKind::NonPendantBlockUnder4, static_cast<int>(b), d.block_vertices[b]});
  }
  return out;
}

namespace {

using Objective = std::tuple<std::int64_t, int, int, int>;

class LocalSearch {
 public:
  LocalSearch(const MultiGraph& g, const EdgeSet& h)
      : g_(g), n_(g.vertex_count()), m_(g.edge_count()), mask_(m_, 0), deg_(n_, 0) {
    for (EdgeId id : h) {
      int i = *g.index_of(id);
      mask_[i] = 1;
      ++deg_[g.edge_at(i).u];
      ++deg_[g.edge_at(i).v];
      ++size_;
    }
  }

  int run() {
    Objective current = objective();
    int iterations = 0;
    const std::int64_t limit =
        static_cast<std::int64_t>(m_ + 1) * (n_ + 1) * (n_ + 1) * (n_ + 1);  // distinct objective values
    while (improve(current)) {
      ++iterations;
      current = objective();
      if (iterations > limit) throw Error(ErrorKind::InvariantViolation, "local search failed to terminate");
    }
    return iterations;
  }

  EdgeSet edges() const {
    EdgeSet out;
    for (int i = 0; i < m_; ++i)
      if (mask_[i]) out.push_back(g_.edge_at(i).id);
    return out;
  }

 private:
  void toggle(int i, bool on) {
    const Edge& e = g_.edge_at(i);
    int d = on ? 1 : -1;
    mask_[i] = on;
    deg_[e.u] += d;
    deg_[e.v] += d;
    size_ += d;
  }

  Objective objective() const {
    MaskSummary s = summarize_mask(g_, mask_);
    return {size_, s.components, s.bridges, s.cut_vertices_in_bridgeless};
  }

  // First vertex that still needs an added edge: a short vertex, else a
  // vertex of a triangle component. -1 when the current mask is a valid cover.
  std::vector<VertexId> need() const {
    for (VertexId v = 0; v < n_; ++v)
      if (deg_[v] < 2) return {v};
    MaskComponents mc = mask_components(g_, mask_);
    for (int c = 0; c < mc.count; ++c)
      if (is_triangle(mc, c)) {
        std::vector<VertexId> tri;
        for (VertexId v = 0; v < n_; ++v)
          if (mc.label[v] == c) tri.push_back(v);
        return tri;
      }
    return {};
  }

  // Candidate additions touching the needed vertices, in edge index order.
  std::vector<int> additions(const std::vector<VertexId>& where) const {
    std::vector<int> out;
    for (VertexId v : where)
      for (const auto& inc : g_.incident(v))
        if (!mask_[inc.edge_index] && !removed_[inc.edge_index] && inc.to != v) out.push_back(inc.edge_index);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool deficit_within(int budget_edges) const {
    int deficit = 0;
    for (VertexId v = 0; v < n_; ++v) deficit += std::max(0, 2 - deg_[v]);
    return deficit <= 2 * budget_edges;
  }

  // Tries every F_A with |F_A| <= max_add after the removal already applied.
  bool try_additions(int max_add, const Objective& current) {
    if (!deficit_within(max_add)) return false;
    std::vector<VertexId> first = need();
    if (first.empty()) return objective() < current;
    if (max_add == 0) return false;
    for (int e : additions(first)) {
      toggle(e, true);
      std::vector<VertexId> second = need();
      if (second.empty()) {
        if (objective() < current) return true;
      } else if (max_add == 2 && deficit_within(1)) {
        for (int f : additions(second)) {
          toggle(f, true);
          if (need().empty() && objective() < current) return true;
          toggle(f, false);
        }
      }
      toggle(e, false);
    }
    return false;
  }

  bool improve(const Objective& current) {
    removed_.assign(m_, 0);
    std::vector<int> in;
    for (int i = 0; i < m_; ++i)
      if (mask_[i]) in.push_back(i);
    for (int i : in) {
      toggle(i, false);
      removed_[i] = 1;
      if (try_additions(1, current)) return true;
      removed_[i] = 0;
      toggle(i, true);
    }
    for (std::size_t a = 0; a < in.size(); ++a)
      for (std::size_t b = a + 1; b < in.size(); ++b) {
        toggle(in[a], false);
        toggle(in[b], false);
        removed_[in[a]] = removed_[in[b]] = 1;
        if (try_additions(2, current)) return true;
        removed_[in[a]] = removed_[in[b]] = 0;
        toggle(in[a], true);
        toggle(in[b], true);
      }
    return false;
  }

  const MultiGraph& g_;
  int n_, m_;
  std::vector<char> mask_, removed_;
  std::vector<int> deg_;
  std::int64_t size_ = 0;
};

}  // namespace

TwoEdgeCover improve_cover(const MultiGraph& g, const TwoEdgeCover& h, CanonicalizeStats* stats) {
  if (!is_triangle_free_cover(g, h.edges))
    throw Error(ErrorKind::InvalidArgument, "local search needs a triangle-free 2-edge cover");
  LocalSearch search(g, h.edges);
  int iterations = search.run();
  if (stats) stats->iterations = iterations;
  if (iterations == 0) return h;
  TwoEdgeCover out = make_cover(g, search.edges(), h.certified_minimum);
  if (!is_triangle_free_cover(g, out.edges))
    throw Error(ErrorKind::InvariantViolation, "local search produced an invalid cover");
  return out;
}

TwoEdgeCover canonicalize(const MultiGraph& g, const TwoEdgeCover& h, CanonicalizeStats* stats) {
  TwoEdgeCover out = improve_cover(g, h, stats);
  auto violations = check_canonical(out);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << violations.size() << " canonical-form violation(s):";
    std::vector<int> witness;
    for (const auto& v : violations) {
      msg << ' ' << to_string(v.kind) << '#' << v.index;
      if (witness.empty()) witness = v.vertices;
    }
    throw Error(ErrorKind::NotCanonical, msg.str(), witness);
  }
  return out;
}

}  // namespace tecss
