#include "tecss/bridge_cover.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "tecss/errors.hpp"
#include "tecss/graph_io.hpp"

namespace tecss {

namespace {

struct Candidate {
  EdgeSet added, removed;
  TwoEdgeCover cover;
  CreditLedger ledger;
  int bridges_removed = 0;
  std::int64_t delta = 0;

  auto key() const { return std::make_tuple(-bridges_removed, delta, added.size() + removed.size(), added, removed); }
};

class EarSearch {
 public:
  EarSearch(const MultiGraph& g, const TwoEdgeCover& h, const BridgeCoverOptions& options)
      : g_(g), h_(h), options_(options), in_h_(g.edge_count(), 0) {
    for (EdgeId id : h.edges) in_h_[*g.index_of(id)] = 1;
    base_cost_ = cost(h, init_credits(h)).quarters;
  }

  // Best acceptable move using ears of exactly `length` host edges.
  std::optional<Candidate> best_of_length(int length) {
    best_.reset();
    seen_.clear();
    const auto& d = h_.decomposition;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      if (!d.component_complex[c]) continue;
      start_ = static_cast<int>(c);
      for (VertexId a : d.components[c])
        for (const auto& inc : g_.incident(a)) {
          int i = inc.edge_index;
          if (in_h_[i] || inc.to == a) continue;
          path_.assign(1, i);
          visited_.assign(1, start_);
          extend(comp(inc.to), length);
          if (capped()) return best_;
        }
    }
    return best_;
  }

  bool capped() const { return evaluations_ >= options_.evaluation_cap; }

 private:
  int comp(VertexId v) const { return h_.decomposition.component_of_vertex[v]; }

  void extend(int at, int length) {
    if (capped()) return;
    if (at == start_) {
      if (static_cast<int>(path_.size()) == length) consider();
      return;
    }
    if (static_cast<int>(path_.size()) >= length) return;
    if (std::find(visited_.begin(), visited_.end(), at) != visited_.end()) return;
    visited_.push_back(at);
    for (VertexId y : h_.decomposition.components[at])
      for (const auto& inc : g_.incident(y)) {
        int i = inc.edge_index;
        if (in_h_[i] || comp(inc.to) == at) continue;
        if (std::find(path_.begin(), path_.end(), i) != path_.end()) continue;
        path_.push_back(i);
        extend(comp(inc.to), length);
        path_.pop_back();
        if (capped()) break;
      }
    visited_.pop_back();
  }

  std::optional<Candidate> evaluate(const EdgeSet& added, const EdgeSet& removed) {
    ++evaluations_;
    EdgeSet edges = set_difference(set_union(h_.edges, added), removed);
    if (!is_triangle_free_cover(g_, edges)) return std::nullopt;
    Candidate c;
    c.cover = make_cover(g_, edges);
    c.bridges_removed = h_.bridge_count() - c.cover.bridge_count();
    if (c.bridges_removed <= 0) return std::nullopt;
    if (!check_canonical(c.cover).empty()) return std::nullopt;
    c.ledger = init_credits(c.cover);
    c.delta = cost(c.cover, c.ledger).quarters - base_cost_;
    if (c.delta > 0) return std::nullopt;
    c.added = added;
    c.removed = removed;
    return c;
  }

  void offer(std::optional<Candidate> c) {
    if (c && (!best_ || c->key() < best_->key())) best_ = std::move(c);
  }

  void consider() {
    std::vector<EdgeId> ids;
    for (int i : path_) ids.push_back(g_.edge_at(i).id);
    EdgeSet added = make_edge_set(ids);
    if (added.size() != path_.size() || !seen_.insert(added).second) return;
    auto plain = evaluate(added, {});
    if (plain) {
      offer(std::move(plain));
      return;
    }
    if (options_.max_removals <= 0) return;
    // Drop edges made redundant by the ear: both endpoints keep degree 3.
    EdgeSet grown = set_union(h_.edges, added);
    std::vector<int> deg(g_.vertex_count(), 0);
    for (EdgeId id : grown) {
      ++deg[g_.edge(id).u];
      ++deg[g_.edge(id).v];
    }
    std::vector<EdgeId> removable;
    for (EdgeId id : grown) {
      const Edge& e = g_.edge(id);
      if (deg[e.u] >= 3 && deg[e.v] >= 3) removable.push_back(id);
    }
    for (std::size_t a = 0; a < removable.size() && !capped(); ++a) {
      offer(evaluate(added, {removable[a]}));
      if (options_.max_removals < 2) continue;
      for (std::size_t b = a + 1; b < removable.size() && !capped(); ++b) {
        const Edge& e = g_.edge(removable[a]);
        const Edge& f = g_.edge(removable[b]);
        // Two removals at one vertex need degree 4 there.
        auto shared_ok = [&](VertexId v) {
          int hits = (e.u == v || e.v == v) + (f.u == v || f.v == v);
          return hits < 2 || deg[v] >= 4;
        };
        if (!shared_ok(e.u) || !shared_ok(e.v)) continue;
        offer(evaluate(added, {removable[a], removable[b]}));
      }
    }
  }

  const MultiGraph& g_;
  const TwoEdgeCover& h_;
  const BridgeCoverOptions& options_;
  std::vector<char> in_h_;
  std::int64_t base_cost_ = 0;
  std::int64_t evaluations_ = 0;
  int start_ = -1;
  std::vector<int> path_;
  std::vector<int> visited_;
  std::set<EdgeSet> seen_;
  std::optional<Candidate> best_;
};

std::string stuck_report(const MultiGraph& g, const TwoEdgeCover& h) {
  std::ostringstream out;
  out << write_graph(g) << "# cover edge ids:";
  for (EdgeId id : h.edges) out << ' ' << id;
  out << '\n';
  return out.str();
}

}  // namespace

BridgeCoverResult cover_bridges(const MultiGraph& g, const TwoEdgeCover& h, const CreditLedger& ledger,
                                const BridgeCoverOptions& options) {
  if (!check_canonical(h).empty()) throw Error(ErrorKind::NotCanonical, "bridge covering needs a canonical cover");
  if (init_credits(h).total_quarters() != ledger.total_quarters())
    throw Error(ErrorKind::InvariantViolation, "ledger does not match the cover");
  BridgeCoverResult result{h, ledger, {}};
  while (result.cover.bridge_count() > 0) {
    std::optional<Candidate> move;
    EarSearch search(g, result.cover, options);
    for (int length = 1; length <= options.max_width && !move; ++length) {
      move = search.best_of_length(length);
      if (search.capped()) break;
    }
    if (!move)
      throw Error(ErrorKind::Stuck,
                  "no cost-preserving ear removes a bridge (" + std::to_string(result.cover.bridge_count()) +
                      " bridges left)",
                  {}, stuck_report(g, result.cover));
    BridgeCoverStep step;
    step.added = move->added;
    step.removed = move->removed;
    step.bridges_before = result.cover.bridge_count();
    step.bridges_after = move->cover.bridge_count();
    step.cost_before = cost(result.cover, result.ledger);
    // Incremental ledger update must agree with the from-scratch one.
    std::vector<VertexId> touched;
    for (EdgeId id : set_union(move->added, move->removed)) {
      touched.push_back(g.edge(id).u);
      touched.push_back(g.edge(id).v);
    }
    CreditLedger updated = update_ledger(result.ledger, result.cover, move->cover, touched);
    if (updated != move->ledger)
      throw Error(ErrorKind::InvariantViolation, "incremental ledger disagrees with recomputation");
    result.cover = std::move(move->cover);
    result.ledger = std::move(updated);
    step.cost_after = cost(result.cover, result.ledger);
    if (step.bridges_after >= step.bridges_before || step.cost_after > step.cost_before)
      throw Error(ErrorKind::InvariantViolation, "bridge covering step broke its contract");
    result.steps.push_back(std::move(step));
  }
  return result;
}

}  // namespace tecss
