#include "tecss/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tecss/connectivity.hpp"
#include "tecss/errors.hpp"

namespace tecss {

namespace {

enum : char { kFree = 0, kIn = 1, kOut = 2 };

class TwoEcssSearch {
 public:
  TwoEcssSearch(const MultiGraph& g, const EdgeSet& fixed, std::int64_t budget)
      : g_(g), n_(g.vertex_count()), m_(g.edge_count()), budget_(budget), status_(m_, kFree),
        deg_in_(n_, 0), deg_avail_(n_, 0), counted_(m_, 1) {
    for (EdgeId id : fixed) {
      auto idx = g.index_of(id);
      if (!idx) throw Error(ErrorKind::InvalidArgument, "fixed edge " + std::to_string(id) + " not in graph");
      counted_[*idx] = 0;
    }
    int fixed_nonloop = 0;
    for (int i = 0; i < m_; ++i) {
      const Edge& e = g.edge_at(i);
      if (!counted_[i]) {
        status_[i] = kIn;
        if (!e.is_loop()) ++fixed_nonloop;
      } else if (e.is_loop()) {
        status_[i] = kOut;
      }
      if (status_[i] != kOut && !e.is_loop()) {
        ++deg_avail_[e.u];
        ++deg_avail_[e.v];
        if (status_[i] == kIn) {
          ++deg_in_[e.u];
          ++deg_in_[e.v];
        }
      }
    }
    floor_ = n_ >= 2 ? std::max<std::int64_t>(0, n_ - fixed_nonloop) : 0;
  }

  std::optional<ExactResult> run() {
    std::vector<char> all(m_);
    for (int i = 0; i < m_; ++i) all[i] = status_[i] != kOut;
    if (!is_two_edge_connected_mask(g_, all)) return std::nullopt;
    // Greedy upper bound.
    EdgeSet everything;
    EdgeSet fixed;
    for (int i = 0; i < m_; ++i) {
      if (status_[i] == kOut) continue;
      everything.push_back(g_.edge_at(i).id);
      if (!counted_[i]) fixed.push_back(g_.edge_at(i).id);
    }
    // Fixed edges are free; the greedy may have dropped some, so put them back.
    best_set_ = set_union(greedy_minimal_2ecss(g_, everything, fixed), fixed);
    best_ = 0;
    for (EdgeId id : best_set_)
      if (counted_[*g_.index_of(id)]) ++best_;
    search();
    ExactResult r;
    r.value = best_;
    r.witness = best_set_;
    r.nodes_explored = nodes_;
    r.certified = !aborted_;
    return r;
  }

 private:
  void set_status(int i, char s) {
    const Edge& e = g_.edge_at(i);
    char old = status_[i];
    trail_.push_back({i, old});
    status_[i] = s;
    if (old == kFree && s == kOut) {
      --deg_avail_[e.u];
      --deg_avail_[e.v];
    } else if (old == kFree && s == kIn) {
      ++deg_in_[e.u];
      ++deg_in_[e.v];
      if (counted_[i]) ++in_count_;
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [i, old] = trail_.back();
      trail_.pop_back();
      const Edge& e = g_.edge_at(i);
      if (status_[i] == kOut) {
        ++deg_avail_[e.u];
        ++deg_avail_[e.v];
      } else if (status_[i] == kIn) {
        --deg_in_[e.u];
        --deg_in_[e.v];
        if (counted_[i]) --in_count_;
      }
      status_[i] = old;
    }
  }

  // Degree forcing; returns false on a vertex that cannot reach degree 2.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 0; v < n_; ++v) {
        if (n_ < 2) break;
        if (deg_avail_[v] < 2) return false;
        if (deg_avail_[v] == 2 && deg_in_[v] < 2) {
          for (const auto& inc : g_.incident(v)) {
            if (status_[inc.edge_index] == kFree) {
              set_status(inc.edge_index, kIn);
              changed = true;
            }
          }
        }
      }
    }
    return true;
  }

  std::int64_t lower_bound() const {
    std::int64_t deficit = 0;
    for (VertexId v = 0; v < n_; ++v) deficit += std::max(0, 2 - deg_in_[v]);
    return std::max(in_count_ + (deficit + 1) / 2, floor_);
  }

  void search() {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::size_t mark = trail_.size();
    if (!propagate() || lower_bound() >= best_) {
      undo_to(mark);
      return;
    }
    std::vector<char> in_mask(m_), avail_mask(m_);
    for (int i = 0; i < m_; ++i) {
      in_mask[i] = status_[i] == kIn;
      avail_mask[i] = status_[i] != kOut;
    }
    if (!is_two_edge_connected_mask(g_, avail_mask)) {
      undo_to(mark);
      return;
    }
    if (is_two_edge_connected_mask(g_, in_mask)) {
      best_ = in_count_;
      best_set_.clear();
      for (int i = 0; i < m_; ++i)
        if (in_mask[i]) best_set_.push_back(g_.edge_at(i).id);
      undo_to(mark);
      return;
    }
    std::vector<int> options = branch_options(in_mask);
    for (int option : options) {
      std::size_t before = trail_.size();
      set_status(option, kIn);
      search();
      undo_to(before);
      if (aborted_) break;
      // Later branches exclude the options already tried.
      set_status(option, kOut);
      const Edge& e = g_.edge_at(option);
      if (deg_avail_[e.u] < 2 || deg_avail_[e.v] < 2) break;
    }
    undo_to(mark);
  }

  std::vector<int> branch_options(const std::vector<char>& in_mask) {
    // A vertex short of degree 2 with the fewest free edges.
    VertexId pick = -1;
    int pick_free = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (deg_in_[v] >= 2) continue;
      int free_count = deg_avail_[v] - deg_in_[v];
      if (pick == -1 || free_count < pick_free) {
        pick = v;
        pick_free = free_count;
      }
    }
    std::vector<int> options;
    if (pick != -1) {
      for (const auto& inc : g_.incident(pick))
        if (status_[inc.edge_index] == kFree) options.push_back(inc.edge_index);
    } else {
      // Every vertex has degree 2 but the chosen edges are not 2EC spanning: a
      // leaf class of the bridge forest needs one more edge leaving it.
      int classes = 0;
      std::vector<int> cls = two_edge_class_labels_mask(g_, in_mask, &classes);
      std::vector<int> in_cross(classes, 0);
      std::vector<std::vector<int>> free_cross(classes);
      for (int i = 0; i < m_; ++i) {
        const Edge& e = g_.edge_at(i);
        if (e.is_loop() || cls[e.u] == cls[e.v]) continue;
        if (status_[i] == kIn) {
          ++in_cross[cls[e.u]];
          ++in_cross[cls[e.v]];
        } else if (status_[i] == kFree) {
          free_cross[cls[e.u]].push_back(i);
          free_cross[cls[e.v]].push_back(i);
        }
      }
      int best_class = -1;
      for (int c = 0; c < classes; ++c) {
        if (in_cross[c] > 1) continue;
        if (best_class == -1 || free_cross[c].size() < free_cross[best_class].size()) best_class = c;
      }
      if (best_class != -1) options = free_cross[best_class];
    }
    // Edges that also help a short neighbour go first.
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      auto helps = [&](int i) {
        const Edge& e = g_.edge_at(i);
        return (deg_in_[e.u] < 2) + (deg_in_[e.v] < 2);
      };
      return helps(a) > helps(b);
    });
    return options;
  }

  const MultiGraph& g_;
  int n_, m_;
  std::int64_t budget_;
  std::vector<char> status_;
  std::vector<int> deg_in_, deg_avail_;
  std::vector<char> counted_;
  std::vector<std::pair<int, char>> trail_;
  std::int64_t in_count_ = 0;
  std::int64_t floor_ = 0;
  std::int64_t best_ = 0;
  EdgeSet best_set_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

EdgeSet greedy_minimal_2ecss(const MultiGraph& g, const EdgeSet& start, const EdgeSet& keep_first) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId id : start) mask[*g.index_of(id)] = 1;
  if (!is_two_edge_connected_mask(g, mask)) throw Error(ErrorKind::InvalidArgument, "greedy start is not 2EC");
  std::vector<int> order;
  for (int i = 0; i < g.edge_count(); ++i)
    if (mask[i]) order.push_back(i);
  auto degree_in = [&](VertexId v) {
    int d = 0;
    for (const auto& inc : g.incident(v)) d += mask[inc.edge_index];
    return d;
  };
  // Outside keep_first first, then edges at high-degree vertices, then by id.
  std::vector<int> weight(g.edge_count(), 0);
  for (int i : order) {
    const Edge& e = g.edge_at(i);
    weight[i] = degree_in(e.u) + degree_in(e.v);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    bool ka = set_contains(keep_first, g.edge_at(a).id), kb = set_contains(keep_first, g.edge_at(b).id);
    if (ka != kb) return !ka;
    return weight[a] > weight[b];
  });
  for (int i : order) {
    const Edge& e = g.edge_at(i);
    if (e.is_loop()) {
      mask[i] = 0;
      continue;
    }
    mask[i] = 0;
    if (!is_two_edge_connected_mask(g, mask)) mask[i] = 1;
  }
  EdgeSet out;
  for (int i = 0; i < g.edge_count(); ++i)
    if (mask[i]) out.push_back(g.edge_at(i).id);
  return out;
}

std::optional<ExactResult> exact_min_2ecss_with_fixed(const MultiGraph& g, const EdgeSet& fixed, std::int64_t budget) {
  TwoEcssSearch search(g, make_edge_set(fixed), budget);
  auto r = search.run();
  if (!r) throw Error(ErrorKind::Infeasible, "graph is not 2-edge-connected");
  return r;
}

std::optional<ExactResult> exact_min_2ecss(const MultiGraph& g, std::int64_t budget) {
  return exact_min_2ecss_with_fixed(g, {}, budget);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool connected_without(const MultiGraph& g, const std::vector<int>& edges, int skip) {
  UnionFind uf(g.vertex_count());
  int pieces = g.vertex_count();
  for (int i : edges) {
    if (i == skip) continue;
    const Edge& e = g.edge_at(i);
    if (uf.unite(e.u, e.v)) --pieces;
  }
  return pieces <= 1;
}

}  // namespace

bool verify_2ecss(const MultiGraph& g, const EdgeSet& h) {
  std::vector<int> edges;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k > 0 && h[k] <= h[k - 1]) return false;
    auto idx = g.index_of(h[k]);
    if (!idx) return false;
    if (!g.edge_at(*idx).is_loop()) edges.push_back(*idx);
  }
  if (!connected_without(g, edges, -1)) return false;
  for (int i : edges)
    if (!connected_without(g, edges, i)) return false;
  return true;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const MultiGraph& g, std::int64_t budget)
      : g_(g), n_(g.vertex_count()), budget_(budget), deg_in_(n_, 0), deg_avail_(n_, 0) {
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge_at(i);
      if (e.is_loop()) continue;
      order_.push_back(i);
      ++deg_avail_[e.u];
      ++deg_avail_[e.v];
    }
    chosen_.assign(g.edge_count(), 0);
    deficit_ = 2LL * n_;
  }

  void run() {
    for (VertexId v = 0; v < n_; ++v)
      if (deg_avail_[v] < 2) throw Error(ErrorKind::Infeasible, "vertex " + std::to_string(v) + " has degree < 2");
    step(0);
  }

  bool found() const { return best_ < kNone; }
  std::int64_t best() const { return best_; }
  const EdgeSet& best_set() const { return best_set_; }
  std::int64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

  bool has_triangle_component() const {
    std::vector<int> label(n_, -1);
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < n_; ++s) {
      if (label[s] != -1) continue;
      label[s] = s;
      queue.assign(1, s);
      int edge_ends = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& inc : g_.incident(queue[head])) {
          if (!chosen_[inc.edge_index]) continue;
          ++edge_ends;
          if (label[inc.to] == -1) {
            label[inc.to] = s;
            queue.push_back(inc.to);
          }
        }
      }
      if (queue.size() == 3 && edge_ends == 6) return true;
    }
    return false;
  }

  void step(std::size_t k) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (count_ + (deficit_ + 1) / 2 >= best_) return;
    if (k == order_.size()) {
      if (deficit_ != 0 || has_triangle_component()) return;
      best_ = count_;
      best_set_.clear();
      for (int i : order_)
        if (chosen_[i]) best_set_.push_back(g_.edge_at(i).id);
      return;
    }
    const int i = order_[k];
    const Edge& e = g_.edge_at(i);
    // Exclude first, when both endpoints can still reach degree 2.
    if (deg_avail_[e.u] > 2 && deg_avail_[e.v] > 2) {
      --deg_avail_[e.u];
      --deg_avail_[e.v];
      step(k + 1);
      ++deg_avail_[e.u];
      ++deg_avail_[e.v];
    }
    int gain = (deg_in_[e.u] < 2) + (deg_in_[e.v] < 2);
    chosen_[i] = 1;
    ++deg_in_[e.u];
    ++deg_in_[e.v];
    deficit_ -= gain;
    ++count_;
    step(k + 1);
    --count_;
    deficit_ += gain;
    --deg_in_[e.u];
    --deg_in_[e.v];
    chosen_[i] = 0;
  }

  const MultiGraph& g_;
  int n_;
  std::int64_t budget_;
  std::vector<int> deg_in_, deg_avail_;
  std::vector<int> order_;
  std::vector<char> chosen_;
  std::int64_t deficit_ = 0;
  std::int64_t count_ = 0;
  std::int64_t best_ = kNone;
  EdgeSet best_set_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::optional<ExactResult> exact_min_tf_cover(const MultiGraph& g, std::int64_t budget) {
  CoverSearch search(g, budget);
  search.run();
  if (!search.found()) {
    if (search.aborted()) return std::nullopt;
    throw Error(ErrorKind::Infeasible, "no triangle-free 2-edge cover exists");
  }
  ExactResult r;
  r.value = search.best();
  r.witness = search.best_set();
  r.nodes_explored = search.nodes();
  r.certified = !search.aborted();
  return r;
}

}  // namespace tecss
