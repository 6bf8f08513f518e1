#include "tecss/matching.hpp"

#include <algorithm>

#include "tecss/errors.hpp"

namespace tecss {

std::vector<EdgeId> max_matching_across(const MultiGraph& g, const std::vector<VertexId>& side_a,
                                        const std::vector<VertexId>& side_b) {
  const int n = g.vertex_count();
  std::vector<int> side(n, 0);
  for (VertexId v : side_a) side.at(v) = 1;
  for (VertexId v : side_b) {
    if (side.at(v) == 1) throw Error(ErrorKind::InvalidArgument, "matching sides overlap");
    side[v] = 2;
  }
  // Left vertices are side_a; adjacency lists hold (right vertex, edge id) with
  // the smallest edge id per neighbour.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    VertexId a = e.u, b = e.v;
    if (side[a] == 2 && side[b] == 1) std::swap(a, b);
    if (side[a] != 1 || side[b] != 2) continue;
    adj[a].push_back({b, e.id});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end(),
                           [](const auto& x, const auto& y) { return x.first == y.first; }),
               list.end());
  }

  std::vector<VertexId> match_right(n, -1);
  std::vector<EdgeId> match_edge(n, -1);
  std::vector<int> used(n, -1);
  int stamp = 0;

  // Kuhn's augmenting paths; recursion depth is bounded by |side_a|.
  auto augment = [&](auto&& self, VertexId left) -> bool {
    for (const auto& [right, eid] : adj[left]) {
      if (used[right] == stamp) continue;
      used[right] = stamp;
      if (match_right[right] == -1 || self(self, match_right[right])) {
        match_right[right] = left;
        match_edge[right] = eid;
        return true;
      }
    }
    return false;
  };

  std::vector<VertexId> lefts = side_a;
  std::sort(lefts.begin(), lefts.end());
  for (VertexId l : lefts) {
    ++stamp;
    augment(augment, l);
  }
  std::vector<EdgeId> out;
  for (VertexId r = 0; r < n; ++r)
    if (match_right[r] != -1) out.push_back(match_edge[r]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tecss
