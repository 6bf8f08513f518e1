#include "brute.hpp"

#include <algorithm>
#include <numeric>

namespace brute {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

int count_components(int n, const std::vector<std::pair<int, int>>& es) {
  Dsu d(n);
  int c = n;
  for (auto [a, b] : es)
    if (d.join(a, b)) --c;
  return c;
}

std::vector<std::pair<int, int>> endpoints(const MultiGraph& g, const EdgeSet& h) {
  std::vector<std::pair<int, int>> out;
  for (EdgeId id : h) {
    const auto& e = g.edge(id);
    out.push_back({e.u, e.v});
  }
  return out;
}

}  // namespace

bool is_connected_subset(const MultiGraph& g, const EdgeSet& h) {
  return g.vertex_count() <= 1 || count_components(g.vertex_count(), endpoints(g, h)) == 1;
}

bool is_2ecss(const MultiGraph& g, const EdgeSet& h) {
  auto es = endpoints(g, h);
  const int n = g.vertex_count();
  if (n == 0) return true;
  if (count_components(n, es) != 1) return false;
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto rest = es;
    rest.erase(rest.begin() + i);
    if (count_components(n, rest) != 1) return false;
  }
  return true;
}

bool is_tf_cover(const MultiGraph& g, const EdgeSet& h) {
  const int n = g.vertex_count();
  std::vector<int> deg(n, 0);
  auto es = endpoints(g, h);
  for (auto [a, b] : es) {
    if (a == b) return false;  // covers never use loops
    ++deg[a];
    ++deg[b];
  }
  for (int d : deg)
    if (d < 2) return false;
  Dsu d(n);
  for (auto [a, b] : es) d.join(a, b);
  std::vector<int> vc(n, 0), ec(n, 0);
  for (int v = 0; v < n; ++v) ++vc[d.find(v)];
  for (auto [a, b] : es) ++ec[d.find(a)];
  for (int r = 0; r < n; ++r)
    if (vc[r] == 3 && ec[r] == 3) return false;
  return true;
}

bool for_each_subset(const MultiGraph& g, int k, const std::function<bool(const EdgeSet&)>& visit) {
  const int m = g.edge_count();
  if (k > m || k < 0) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  EdgeSet s(k);
  while (true) {
    for (int i = 0; i < k; ++i) s[i] = g.edge_at(idx[i]).id;
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<int> min_subset(const MultiGraph& g, const std::function<bool(const EdgeSet&)>& ok, EdgeSet* witness) {
  for (int k = 0; k <= g.edge_count(); ++k) {
    bool found = for_each_subset(g, k, [&](const EdgeSet& s) {
      if (!ok(s)) return false;
      if (witness) *witness = s;
      return true;
    });
    if (found) return k;
  }
  return std::nullopt;
}

std::optional<int> min_2ecss(const MultiGraph& g, EdgeSet* witness) {
  return min_subset(g, [&](const EdgeSet& s) { return is_2ecss(g, s); }, witness);
}

std::optional<int> min_tf_cover(const MultiGraph& g, EdgeSet* witness) {
  return min_subset(g, [&](const EdgeSet& s) { return is_tf_cover(g, s); }, witness);
}

bool is_simple_cycle(const MultiGraph& g, const EdgeSet& c) {
  if (c.empty()) return false;
  auto es = endpoints(g, c);
  if (es.size() == 1) return es[0].first == es[0].second;
  std::vector<int> deg(g.vertex_count(), 0);
  for (auto [a, b] : es) {
    if (a == b) return false;
    ++deg[a];
    ++deg[b];
  }
  int touched = 0;
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
    touched += d == 2;
  }
  // One connected piece over the touched vertices.
  int comps = count_components(g.vertex_count(), es);
  return comps == g.vertex_count() - touched + 1;
}

std::vector<EdgeSet> all_cycles(const MultiGraph& g) {
  std::vector<EdgeSet> out;
  for (int k = 1; k <= std::min(g.edge_count(), g.vertex_count()); ++k)
    for_each_subset(g, k, [&](const EdgeSet& s) {
      if (is_simple_cycle(g, s)) out.push_back(s);
      return false;
    });
  return out;
}

int min_cross_vertex_cover(const MultiGraph& g, const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
  for (VertexId v : a) in_a[v] = 1;
  for (VertexId v : b) in_b[v] = 1;
  std::vector<std::pair<int, int>> cross;
  for (const auto& e : g.edges())
    if ((in_a[e.u] && in_b[e.v]) || (in_a[e.v] && in_b[e.u])) cross.push_back({e.u, e.v});
  const int k = static_cast<int>(cross.size());
  int best = k;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i) chosen.push_back((mask >> i & 1) ? cross[i].second : cross[i].first);
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    best = std::min(best, static_cast<int>(chosen.size()));
  }
  return best;
}

std::vector<std::vector<VertexId>> components_without(const MultiGraph& g, const std::vector<VertexId>& removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (VertexId v : removed) gone[v] = 1;
  Dsu d(n);
  for (const auto& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) d.join(e.u, e.v);
  std::vector<std::vector<VertexId>> groups(n);
  for (int v = 0; v < n; ++v)
    if (!gone[v]) groups[d.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& grp : groups)
    if (!grp.empty()) out.push_back(grp);
  std::sort(out.begin(), out.end());
  return out;
}

MultiGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  MultiGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

MultiGraph random_2ec(int n, int extra, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> es;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    int a = perm[i], b = perm[(i + 1) % n];
    es.push_back({std::min(a, b), std::max(a, b)});
    has[a][b] = has[b][a] = 1;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int tries = 0; extra > 0 && tries < 50 * (extra + 1); ++tries) {
    int a = pick(rng), b = pick(rng);
    if (a == b || has[a][b]) continue;
    has[a][b] = has[b][a] = 1;
    es.push_back({std::min(a, b), std::max(a, b)});
    --extra;
  }
  std::sort(es.begin(), es.end());
  return from_edges(n, es);
}

MultiGraph random_multigraph(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  MultiGraph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(pick(rng), pick(rng));
  return g;
}

MultiGraph cycle(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  MultiGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace brute
