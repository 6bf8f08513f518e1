#include "tecss/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tecss/connectivity.hpp"
#include "tecss/errors.hpp"

namespace tecss {

namespace {

constexpr int kAttempts = 2000;

using EdgeList = std::vector<std::pair<int, int>>;

MultiGraph build(int n, EdgeList edges) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  MultiGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

int below(std::mt19937_64& rng, std::int64_t n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

std::int64_t param(const GeneratorParams& p, const GeneratorParams& defaults, const std::string& name) {
  auto it = p.find(name);
  return it != p.end() ? it->second : defaults.at(name);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, message);
}

MultiGraph random_2ec(std::int64_t n, std::int64_t percent, std::mt19937_64& rng) {
  require(n >= 3 && n <= 2000, "random-2ec needs 3 <= n <= 2000");
  require(percent > 0 && percent <= 100, "random-2ec needs 0 < p_percent <= 100");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    EdgeList es;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (below(rng, 100) < percent) es.push_back({a, b});
    MultiGraph g = build(static_cast<int>(n), es);
    if (is_two_edge_connected(g)) return g;
  }
  throw Error(ErrorKind::RejectionLimit, "no 2-edge-connected random graph after " + std::to_string(kAttempts) + " draws");
}

// Drops random edges one at a time while the graph stays 2EC.
MultiGraph drop_edges(MultiGraph g, std::int64_t drop, std::mt19937_64& rng) {
  for (std::int64_t d = 0; d < drop; ++d) {
    bool dropped = false;
    for (int attempt = 0; attempt < kAttempts && !dropped; ++attempt) {
      EdgeId id = g.edge_at(below(rng, g.edge_count())).id;
      MultiGraph h = remove_edges(g, {id});
      if (is_two_edge_connected(h)) {
        g = std::move(h);
        dropped = true;
      }
    }
    if (!dropped) throw Error(ErrorKind::RejectionLimit, "could not drop another edge and stay 2-edge-connected");
  }
  // Renumber edge ids densely.
  EdgeList es;
  for (const auto& e : g.edges()) es.push_back({e.u, e.v});
  return build(g.vertex_count(), es);
}

MultiGraph glued_cliques(std::int64_t a, std::int64_t b, std::int64_t shared, std::int64_t drop,
                         std::mt19937_64& rng) {
  require(a >= 3 && b >= 3 && a <= 200 && b <= 200, "glued-cliques needs 3 <= a, b <= 200");
  require(shared >= 1 && shared < std::min(a, b), "glued-cliques needs 1 <= shared < min(a, b)");
  require(drop >= 0, "glued-cliques needs drop >= 0");
  const int n = static_cast<int>(a + b - shared);
  std::set<std::pair<int, int>> es;
  for (int x = 0; x < a; ++x)
    for (int y = x + 1; y < a; ++y) es.insert({x, y});
  std::vector<int> second;
  for (int x = 0; x < shared; ++x) second.push_back(x);
  for (int x = static_cast<int>(a); x < n; ++x) second.push_back(x);
  for (std::size_t i = 0; i < second.size(); ++i)
    for (std::size_t j = i + 1; j < second.size(); ++j) es.insert({second[i], second[j]});
  return drop_edges(build(n, EdgeList(es.begin(), es.end())), drop, rng);
}

MultiGraph cycle_ring(std::int64_t k, std::int64_t len, std::int64_t links, std::int64_t chords,
                      std::mt19937_64& rng) {
  require(k >= 2 && k <= 500, "cycle-ring needs 2 <= k <= 500");
  require(len >= 3 && len <= 500, "cycle-ring needs 3 <= cyclen <= 500");
  require(links >= 1 && links <= len * len, "cycle-ring needs 1 <= links <= cyclen^2");
  require(chords >= 0, "cycle-ring needs chords >= 0");
  if (k == 2) require(links >= 2, "cycle-ring with k = 2 needs links >= 2");
  const int n = static_cast<int>(k * len);
  std::set<std::pair<int, int>> es;
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < len; ++i) {
      int a = static_cast<int>(c * len + i), b = static_cast<int>(c * len + (i + 1) % len);
      es.insert(std::minmax(a, b));
    }
  auto link = [&](int c, int d) {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      int a = static_cast<int>(c * len) + below(rng, len), b = static_cast<int>(d * len) + below(rng, len);
      if (es.insert(std::minmax(a, b)).second) return;
    }
    throw Error(ErrorKind::RejectionLimit, "no free pair left between two cycles");
  };
  for (int c = 0; c < (k == 2 ? 1 : k); ++c)
    for (int l = 0; l < links; ++l) link(c, static_cast<int>((c + 1) % k));
  for (int l = 0; l < chords; ++l) {
    int c = below(rng, k), d = below(rng, k - 1);
    if (d >= c) ++d;
    link(c, d);
  }
  return build(n, EdgeList(es.begin(), es.end()));
}

MultiGraph structured_random(std::int64_t n, std::int64_t degree, std::mt19937_64& rng) {
  require(n >= 8 && n <= 2000, "structured-random needs 8 <= n <= 2000");
  require(degree >= 3 && degree < n, "structured-random needs 3 <= degree < n");
  require(degree % 2 == 0 || n % 2 == 0, "structured-random needs an even degree or an even n");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::set<std::pair<int, int>> es;
    bool ok = true;
    std::vector<int> order(n);
    // Union of random Hamiltonian cycles, plus a perfect matching for odd degree.
    for (int c = 0; c < degree / 2 && ok; ++c) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i < n && ok; ++i) ok = es.insert(std::minmax(order[i], order[(i + 1) % n])).second;
    }
    if (ok && degree % 2 == 1) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i + 1 < n && ok; i += 2) ok = es.insert(std::minmax(order[i], order[i + 1])).second;
    }
    if (ok) return build(static_cast<int>(n), EdgeList(es.begin(), es.end()));
  }
  throw Error(ErrorKind::RejectionLimit, "no simple regular sample found");
}

}  // namespace

std::vector<std::string> generator_families() {
  return {"random-2ec", "glued-cliques", "cycle-ring", "structured-random"};
}

GeneratorParams generator_defaults(const std::string& family) {
  if (family == "random-2ec") return {{"n", 12}, {"p_percent", 35}};
  if (family == "glued-cliques") return {{"a", 10}, {"b", 10}, {"shared", 3}, {"drop", 0}};
  if (family == "cycle-ring") return {{"k", 5}, {"cyclen", 4}, {"links", 2}, {"chords", 0}};
  if (family == "structured-random") return {{"n", 24}, {"degree", 4}};
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
}

MultiGraph generate(const std::string& family, const GeneratorParams& params, std::uint64_t seed) {
  GeneratorParams d = generator_defaults(family);
  for (const auto& [name, value] : params)
    if (!d.count(name)) throw Error(ErrorKind::InvalidArgument, "family '" + family + "' has no parameter '" + name + "'");
  std::mt19937_64 rng(seed);
  auto p = [&](const char* name) { return param(params, d, name); };
  if (family == "random-2ec") return random_2ec(p("n"), p("p_percent"), rng);
  if (family == "glued-cliques") return glued_cliques(p("a"), p("b"), p("shared"), p("drop"), rng);
  if (family == "cycle-ring") return cycle_ring(p("k"), p("cyclen"), p("links"), p("chords"), rng);
  return structured_random(p("n"), p("degree"), rng);
}

}  // namespace tecss
