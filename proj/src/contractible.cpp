#include "tecss/contractible.hpp"

#include <algorithm>
#include <set>

#include "tecss/connectivity.hpp"
#include "tecss/errors.hpp"
#include "tecss/oracle.hpp"

namespace tecss {

const char* to_string(ContractibleBasis basis) {
  return basis == ContractibleBasis::ForcedDegree ? "ForcedDegree" : "Exact";
}

std::int64_t forced_inside_edges(const MultiGraph& g, const std::vector<VertexId>& s) {
  const int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (VertexId v : s) in_s[v] = 1;
  std::vector<char> interior(n, 0);
  for (VertexId v : s) {
    bool all_inside = true;
    for (const auto& inc : g.incident(v))
      if (!in_s[inc.to]) all_inside = false;
    interior[v] = all_inside;
  }
  // Candidate edges: non-loop edges of G[S] touching an interior vertex.
  std::vector<int> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge_at(i);
    if (e.is_loop() || !in_s[e.u] || !in_s[e.v]) continue;
    if (interior[e.u] || interior[e.v]) edges.push_back(i);
  }
  std::vector<int> need(n, 0);
  std::int64_t deficit = 0;
  for (VertexId v : s)
    if (interior[v]) {
      need[v] = 2;
      deficit += 2;
    }
  std::vector<char> used(g.edge_count(), 0);
  std::int64_t best = static_cast<std::int64_t>(edges.size()) + 1;
  auto search = [&](auto&& self, std::int64_t count) -> void {
    if (count + (deficit + 1) / 2 >= best) return;
    // Interior vertex with a deficit and the fewest options.
    VertexId pick = -1;
    int pick_options = 0;
    for (VertexId v : s) {
      if (need[v] <= 0) continue;
      int options = 0;
      for (const auto& inc : g.incident(v))
        if (!used[inc.edge_index] && inc.to != v) ++options;
      if (pick == -1 || options < pick_options) {
        pick = v;
        pick_options = options;
      }
    }
    if (pick == -1) {
      best = count;
      return;
    }
    std::vector<int> tried;
    for (const auto& inc : g.incident(pick)) {
      int i = inc.edge_index;
      if (used[i] || inc.to == pick) continue;
      const Edge& e = g.edge_at(i);
      used[i] = 1;
      int gain = (need[e.u] > 0) + (need[e.v] > 0);
      --need[e.u];
      --need[e.v];
      deficit -= gain;
      self(self, count + 1);
      deficit += gain;
      ++need[e.u];
      ++need[e.v];
      // Keep it excluded for the remaining branches.
      tried.push_back(i);
    }
    for (int i : tried) used[i] = 0;
  };
  search(search, 0);
  if (best > static_cast<std::int64_t>(edges.size()))
    return static_cast<std::int64_t>(edges.size());  // unreachable on 2EC hosts
  return best;
}

std::optional<ContractibleCertificate> certify_contractible(const MultiGraph& g, std::vector<VertexId> s,
                                                            Rational alpha, std::int64_t oracle_budget,
                                                            int exact_edge_limit) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() < 2) return std::nullopt;
  InducedSubgraph sub = induced_subgraph(g, s);
  if (!is_two_edge_connected(sub.graph)) return std::nullopt;
  auto inner = exact_min_2ecss(sub.graph, oracle_budget);
  if (!inner) return std::nullopt;
  const std::int64_t size_c = static_cast<std::int64_t>(inner->witness.size());

  ContractibleCertificate cert;
  cert.vertices = s;
  cert.subgraph = inner->witness;
  std::int64_t forced = forced_inside_edges(g, s);
  if (alpha * Rational(forced) >= Rational(size_c)) {
    cert.inside_lower_bound = forced;
    cert.basis = ContractibleBasis::ForcedDegree;
    return cert;
  }
  // The exact bound can only beat the degree bound by the boundary edges; skip
  // it when even two more forced edges would not suffice.
  const std::int64_t inside_edges = sub.graph.edge_count();
  if (inside_edges > exact_edge_limit || alpha * Rational(forced + 2) < Rational(size_c)) return std::nullopt;
  EdgeSet outside = set_difference(g.edge_ids(), sub.graph.edge_ids());
  auto exact = exact_min_2ecss_with_fixed(g, outside, oracle_budget);
  if (!exact || !exact->certified) return std::nullopt;
  if (alpha * Rational(exact->value) >= Rational(size_c)) {
    cert.inside_lower_bound = exact->value;
    cert.basis = ContractibleBasis::Exact;
    return cert;
  }
  return std::nullopt;
}

std::optional<ContractibleCertificate> find_contractible_certificate(const MultiGraph& g, Rational alpha,
                                                                     int max_vertices, std::int64_t oracle_budget) {
  const int n = g.vertex_count();
  constexpr int kLowDegree = 4;
  constexpr int kMaxCore = 4;
  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& inc : g.incident(v))
      if (inc.to != v) nbrs[v].push_back(inc.to);
    std::sort(nbrs[v].begin(), nbrs[v].end());
    nbrs[v].erase(std::unique(nbrs[v].begin(), nbrs[v].end()), nbrs[v].end());
  }
  std::vector<char> low(n, 0);
  for (VertexId v = 0; v < n; ++v) low[v] = g.degree(v) <= kLowDegree;
  // Low-degree vertices within distance two.
  std::vector<std::vector<VertexId>> near(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!low[v]) continue;
    std::set<VertexId> reach;
    for (VertexId a : nbrs[v]) {
      if (low[a]) reach.insert(a);
      for (VertexId b : nbrs[a])
        if (b != v && low[b]) reach.insert(b);
    }
    near[v].assign(reach.begin(), reach.end());
  }

  std::set<std::vector<VertexId>> tried;
  std::optional<ContractibleCertificate> found;
  auto consider = [&](const std::vector<VertexId>& core) {
    std::vector<VertexId> s;
    for (VertexId v : core) {
      s.push_back(v);
      s.insert(s.end(), nbrs[v].begin(), nbrs[v].end());
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (static_cast<int>(s.size()) > max_vertices || s.size() < 3 || static_cast<int>(s.size()) == n) return false;
    if (!tried.insert(s).second) return false;
    std::int64_t forced = forced_inside_edges(g, s);
    // |E(C)| >= |S| for any 2EC C on S; the exact bound adds at most 2 here.
    if (alpha * Rational(forced + 2) < Rational(static_cast<std::int64_t>(s.size()))) return false;
    found = certify_contractible(g, s, alpha, oracle_budget);
    return found.has_value();
  };

  // Connected sets in the distance-two graph, rooted at their smallest vertex.
  std::vector<VertexId> core;
  auto grow = [&](auto&& self, std::vector<VertexId> frontier, VertexId root) -> bool {
    if (consider(core)) return true;
    if (static_cast<int>(core.size()) == kMaxCore) return false;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      VertexId x = frontier[i];
      std::vector<VertexId> next(frontier.begin() + i + 1, frontier.end());
      for (VertexId y : near[x]) {
        if (y <= root || std::find(core.begin(), core.end(), y) != core.end()) continue;
        if (std::find(next.begin(), next.end(), y) != next.end()) continue;
        bool adjacent_to_core = false;
        for (VertexId c : core)
          if (std::binary_search(near[c].begin(), near[c].end(), y)) adjacent_to_core = true;
        if (!adjacent_to_core) next.push_back(y);
      }
      core.push_back(x);
      if (self(self, next, root)) return true;
      core.pop_back();
    }
    return false;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (!low[root]) continue;
    core.assign(1, root);
    std::vector<VertexId> frontier;
    for (VertexId y : near[root])
      if (y > root) frontier.push_back(y);
    if (grow(grow, frontier, root)) return found;
  }
  return std::nullopt;
}

}  // namespace tecss
