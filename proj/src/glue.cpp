#include "tecss/glue.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tecss/connectivity.hpp"
#include "tecss/contractible.hpp"
#include "tecss/cycles.hpp"
#include "tecss/errors.hpp"

namespace tecss {

const char* to_string(GlueKind kind) {
  switch (kind) {
    case GlueKind::MakeHuge: return "MakeHuge";
    case GlueKind::TrivialSegmentGlue: return "TrivialSegmentGlue";
    case GlueKind::NonTrivialSegmentGlue: return "NonTrivialSegmentGlue";
  }
  return "Unknown";
}

ComponentGraph build_component_graph(const MultiGraph& g, const TwoEdgeCover& h) {
  if (h.bridge_count() > 0) throw Error(ErrorKind::InvalidArgument, "component graph needs a bridgeless cover");
  const auto& d = h.decomposition;
  const int count = static_cast<int>(d.components.size());
  std::vector<int> order(count);
  for (int c = 0; c < count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d.components[a].front() < d.components[b].front(); });
  ComponentGraph cg;
  cg.contracted = MultiGraph(count);
  cg.node_of_vertex.assign(g.vertex_count(), -1);
  for (int node = 0; node < count; ++node) {
    int c = order[node];
    cg.node_component.push_back(c);
    cg.node_vertices.push_back(d.components[c]);
    for (VertexId v : d.components[c]) cg.node_of_vertex[v] = node;
  }
  for (const auto& e : g.edges()) {
    int a = cg.node_of_vertex[e.u], b = cg.node_of_vertex[e.v];
    if (a != b) cg.contracted.add_edge_with_id(e.id, a, b);
  }
  cg.contracted.reserve_ids(g.next_edge_id());
  return cg;
}

std::vector<Segment> compute_segments(const ComponentGraph& cg) {
  const MultiGraph& c = cg.contracted;
  std::vector<Segment> out;
  std::vector<char> covered(c.vertex_count(), 0);
  for (const EdgeSet& piece : biconnected_components(c)) {
    std::vector<VertexId> nodes = vertices_of(c, piece);
    if (nodes.size() < 3) continue;
    for (VertexId x : nodes) covered[x] = 1;
    out.push_back({nodes, piece, false});
  }
  std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.edges < b.edges; });
  for (int x = 0; x < c.vertex_count(); ++x)
    if (!covered[x]) out.push_back({{x}, {}, true});
  return out;
}

namespace {

struct Evaluated {
  TwoEdgeCover cover;
  CreditLedger ledger;
  std::int64_t delta = 0;
  EdgeSet added, removed;
};

// The cover after the change, if it is a bridgeless canonical triangle-free
// cover with fewer components. The ledger is updated incrementally and
// compared against a full recomputation.
std::optional<Evaluated> evaluate(const MultiGraph& g, const GlueState& state, const EdgeSet& add,
                                  const EdgeSet& remove) {
  EdgeSet edges = set_union(set_difference(state.cover.edges, remove), add);
  if (!is_triangle_free_cover(g, edges)) return std::nullopt;
  Evaluated ev;
  ev.cover = make_cover(g, edges);
  if (ev.cover.bridge_count() > 0 || ev.cover.component_count() >= state.cover.component_count()) return std::nullopt;
  if (!check_canonical(ev.cover).empty()) return std::nullopt;
  ev.added = set_difference(edges, state.cover.edges);
  ev.removed = set_difference(state.cover.edges, edges);
  std::vector<VertexId> touched;
  for (EdgeId id : set_union(ev.added, ev.removed)) {
    touched.push_back(g.edge(id).u);
    touched.push_back(g.edge(id).v);
  }
  ev.ledger = update_ledger(state.ledger, state.cover, ev.cover, touched);
  if (ev.ledger != init_credits(ev.cover))
    throw Error(ErrorKind::InvariantViolation, "incremental ledger disagrees with recomputation");
  ev.delta = cost(ev.cover, ev.ledger).quarters - cost(state.cover, state.ledger).quarters;
  return ev;
}

GlueStep commit(GlueState& state, Evaluated ev, GlueKind kind, std::string rule) {
  GlueStep step;
  step.kind = kind;
  step.rule = std::move(rule);
  step.added = ev.added;
  step.removed = ev.removed;
  step.delta_quarters = ev.delta;
  step.components_before = state.cover.component_count();
  step.components_after = ev.cover.component_count();
  state.cover = std::move(ev.cover);
  state.ledger = std::move(ev.ledger);
  return step;
}

bool has_huge(const TwoEdgeCover& h) {
  for (const auto& c : h.decomposition.components)
    if (static_cast<int>(c.size()) >= kHugeVertices) return true;
  return false;
}

// Host edges of a Hamiltonian path, preferring cover edges between
// consecutive vertices.
EdgeSet path_edges(const MultiGraph& g, const std::vector<VertexId>& path, const EdgeSet& prefer) {
  EdgeSet out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    EdgeId pick = -1;
    bool pick_preferred = false;
    for (const auto& inc : g.incident(path[i])) {
      if (inc.to != path[i + 1]) continue;
      EdgeId id = g.edge_at(inc.edge_index).id;
      bool preferred = set_contains(prefer, id);
      if (pick == -1 || (preferred && !pick_preferred) || (preferred == pick_preferred && id < pick)) {
        pick = id;
        pick_preferred = preferred;
      }
    }
    out.push_back(pick);
  }
  return make_edge_set(out);
}

std::vector<VertexId> to_host(const InducedSubgraph& sub, const std::vector<VertexId>& local) {
  std::vector<VertexId> out;
  for (VertexId v : local) out.push_back(sub.to_host[v]);
  return out;
}

const EdgeSet& component_edges(const TwoEdgeCover& h, const ComponentGraph& cg, int node) {
  return h.decomposition.component_edges[cg.node_component[node]];
}

ComponentClass node_class(const TwoEdgeCover& h, const ComponentGraph& cg, int node) {
  return h.classes[cg.node_component[node]];
}

[[noreturn]] void structured_violation(const MultiGraph& g, const std::vector<VertexId>& vertices,
                                       const GlueOptions& options, const std::string& where) {
  auto cert = certify_contractible(g, vertices, options.alpha, options.oracle_budget);
  if (cert)
    throw Error(ErrorKind::StructuredViolation,
                where + ": the small component is contractible (basis " + to_string(cert->basis) + ")", vertices);
  throw Error(ErrorKind::CaseLadderExhausted, where + ": no case applies", vertices);
}

}  // namespace

GlueStep make_huge(const MultiGraph& g, GlueState& state, const GlueOptions&) {
  if (has_huge(state.cover) || state.cover.component_count() <= 1) {
    GlueStep noop;
    noop.rule = "already-huge";
    noop.components_before = noop.components_after = state.cover.component_count();
    return noop;
  }
  ComponentGraph cg = build_component_graph(g, state.cover);
  int a = 0;
  for (int x = 1; x < cg.contracted.vertex_count(); ++x)
    if (cg.node_vertices[x].size() > cg.node_vertices[a].size()) a = x;
  auto k = shortest_cycle_through_vertex(cg.contracted, a);
  if (!k) throw Error(ErrorKind::InvariantViolation, "component graph has no cycle through the largest node");
  EdgeSet added = make_edge_set(*k);
  std::string rule = "one-cycle";
  TwoEdgeCover merged = make_cover(g, set_union(state.cover.edges, added));
  if (!has_huge(merged) && merged.component_count() > 1) {
    ComponentGraph cg2 = build_component_graph(g, merged);
    auto k2 = shortest_cycle_through_vertex(cg2.contracted, cg2.node_of_vertex[cg.node_vertices[a].front()]);
    if (!k2) throw Error(ErrorKind::InvariantViolation, "no second cycle through the merged node");
    added = set_union(added, make_edge_set(*k2));
    rule = "two-cycles";
  }
  auto ev = evaluate(g, state, added, {});
  if (!ev) throw Error(ErrorKind::InvariantViolation, "cycle union is not a canonical bridgeless cover");
  if (ev->delta > 12) throw Error(ErrorKind::InvariantViolation, "making a huge component cost more than 3");
  return commit(state, std::move(*ev), GlueKind::MakeHuge, rule);
}

GlueStep glue_trivial_segment(const MultiGraph& g, GlueState& state, int huge_node, const GlueOptions& options) {
  ComponentGraph cg = build_component_graph(g, state.cover);
  const int l = huge_node;
  std::map<int, std::vector<EdgeId>> by_neighbour;  // neighbour node -> edges to L, by id
  for (const auto& inc : cg.contracted.incident(l))
    by_neighbour[inc.to].push_back(cg.contracted.edge_at(inc.edge_index).id);
  std::vector<VertexId> first_small;
  for (auto& [a, edges] : by_neighbour) {
    std::sort(edges.begin(), edges.end());
    ComponentClass cls = node_class(state.cover, cg, a);
    if (cls == ComponentClass::Large && edges.size() >= 2) {
      auto ev = evaluate(g, state, {edges[0], edges[1]}, {});
      if (ev && ev->delta <= 0) return commit(state, std::move(*ev), GlueKind::TrivialSegmentGlue, "large-neighbour");
      continue;
    }
    if (cls != ComponentClass::Cycle) continue;
    const auto& va = cg.node_vertices[a];
    if (first_small.empty()) first_small = va;
    InducedSubgraph sub = induced_subgraph(g, va);
    const EdgeSet& ea = component_edges(state.cover, cg, a);
    auto endpoint_in_a = [&](EdgeId id) {
      const Edge& e = g.edge(id);
      return cg.node_of_vertex[e.u] == a ? e.u : e.v;
    };
    std::map<std::pair<VertexId, VertexId>, std::optional<std::vector<VertexId>>> paths;
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        VertexId u = endpoint_in_a(edges[i]), v = endpoint_in_a(edges[j]);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!paths.count(key))
          paths[key] = hamiltonian_path_between(sub.graph, sub.from_host[key.first], sub.from_host[key.second]);
        const auto& p = paths[key];
        if (!p) continue;
        EdgeSet add = set_union(EdgeSet{edges[i], edges[j]}, path_edges(g, to_host(sub, *p), ea));
        auto ev = evaluate(g, state, add, ea);
        if (ev && ev->delta <= 0) return commit(state, std::move(*ev), GlueKind::TrivialSegmentGlue, "cycle-neighbour");
      }
  }
  if (first_small.empty()) throw Error(ErrorKind::CaseLadderExhausted, "trivial segment: no neighbour can be merged");
  structured_violation(g, first_small, options, "trivial segment");
}

std::optional<HugeSmallOutcome> cycle_through_huge_and_small(
    const MultiGraph& g, const ComponentGraph& cg, const TwoEdgeCover& h, int huge_node, int small_node,
    const std::function<bool(const HugeSmallOutcome&)>& accept, const GlueOptions& options) {
  const MultiGraph& c = cg.contracted;
  const int l = huge_node, a = small_node;
  const auto& va = cg.node_vertices[a];
  auto endpoint_in_a = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    return cg.node_of_vertex[e.u] == a ? e.u : e.v;
  };
  // One representative edge per (vertex of C_A, neighbour node).
  std::map<std::pair<VertexId, int>, EdgeId> rep_a;
  for (const auto& inc : c.incident(a)) {
    EdgeId id = c.edge_at(inc.edge_index).id;
    auto key = std::make_pair(endpoint_in_a(id), static_cast<int>(inc.to));
    if (!rep_a.count(key) || id < rep_a[key]) rep_a[key] = id;
  }
  std::vector<std::pair<EdgeId, int>> reps;  // (edge, neighbour node)
  for (const auto& [key, id] : rep_a) reps.push_back({id, key.second});
  std::sort(reps.begin(), reps.end());
  std::map<int, EdgeId> rep_l;
  for (const auto& inc : c.incident(l)) {
    EdgeId id = c.edge_at(inc.edge_index).id;
    if (inc.to == a) continue;
    if (!rep_l.count(inc.to) || id < rep_l[inc.to]) rep_l[inc.to] = id;
  }
  std::vector<EdgeId> l_edges;
  for (const auto& [node, id] : rep_l) l_edges.push_back(id);

  // Every cycle through L and A given by a pair of A-edges, deduplicated.
  struct Found {
    std::vector<EdgeId> cycle;
    VertexId u, v;
  };
  std::vector<Found> cycles;
  std::set<EdgeSet> seen;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      auto [a1, n1] = reps[i];
      auto [a2, n2] = reps[j];
      std::vector<EdgeSet> requirements;
      int at_l = (n1 == l) + (n2 == l);
      if (at_l == 2) {
        requirements.push_back({a1, a2});
      } else if (at_l == 1) {
        for (EdgeId f : l_edges) requirements.push_back(make_edge_set({a1, a2, f}));
      } else {
        for (std::size_t x = 0; x < l_edges.size(); ++x)
          for (std::size_t y = x + 1; y < l_edges.size(); ++y)
            requirements.push_back(make_edge_set({a1, a2, l_edges[x], l_edges[y]}));
      }
      for (const auto& req : requirements) {
        auto k = find_cycle_through_edges(c, req, options.cycle_budget);
        if (!k || !seen.insert(make_edge_set(*k)).second) continue;
        cycles.push_back({*k, endpoint_in_a(a1), endpoint_in_a(a2)});
      }
    }

  InducedSubgraph sub_a = induced_subgraph(g, va);
  const EdgeSet& ea = component_edges(h, cg, a);
  // (a): the cycle enters and leaves C_A at u != v joined by a Hamiltonian path.
  for (const auto& f : cycles) {
    if (f.u == f.v) continue;
    auto p = hamiltonian_path_between(sub_a.graph, sub_a.from_host[f.u], sub_a.from_host[f.v]);
    if (!p) continue;
    HugeSmallOutcome out;
    out.cycle = f.cycle;
    out.u = f.u;
    out.v = f.v;
    out.via_path = true;
    out.path = to_host(sub_a, *p);
    out.replacement = path_edges(g, out.path, ea);
    if (accept(out)) return out;
  }
  // (b): a cycle component D next to A and off the cycle; C_A and C_D are
  // replaced by a 2EC subgraph of G[V(C_A) + V(C_D)] plus the dummy uv.
  std::vector<int> neighbours;
  for (const auto& inc : c.incident(a)) neighbours.push_back(inc.to);
  std::sort(neighbours.begin(), neighbours.end());
  neighbours.erase(std::unique(neighbours.begin(), neighbours.end()), neighbours.end());
  for (const auto& f : cycles) {
    std::set<int> on_cycle;
    for (EdgeId id : f.cycle) {
      on_cycle.insert(cg.node_of_vertex[g.edge(id).u]);
      on_cycle.insert(cg.node_of_vertex[g.edge(id).v]);
    }
    for (int d : neighbours) {
      if (on_cycle.count(d) || node_class(h, cg, d) != ComponentClass::Cycle) continue;
      std::vector<VertexId> both = va;
      both.insert(both.end(), cg.node_vertices[d].begin(), cg.node_vertices[d].end());
      std::sort(both.begin(), both.end());
      InducedSubgraph sub = induced_subgraph(g, both);
      EdgeSet fixed;
      if (f.u != f.v) fixed.push_back(sub.graph.add_edge(sub.from_host[f.u], sub.from_host[f.v]));
      std::optional<ExactResult> best;
      try {
        best = exact_min_2ecss_with_fixed(sub.graph, fixed, options.oracle_budget);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Infeasible) throw;
        continue;
      }
      if (!best) continue;
      EdgeSet replacement = set_difference(best->witness, fixed);
      if (replacement.size() > ea.size() + component_edges(h, cg, d).size()) continue;
      HugeSmallOutcome out;
      out.cycle = f.cycle;
      out.u = f.u;
      out.v = f.v;
      out.via_path = false;
      out.other_node = d;
      out.replacement = replacement;
      if (accept(out)) return out;
    }
  }
  return std::nullopt;
}

GlueStep glue_nontrivial_segment(const MultiGraph& g, GlueState& state, int huge_node, const Segment& segment,
                                 const GlueOptions& options) {
  ComponentGraph cg = build_component_graph(g, state.cover);
  std::vector<int> smalls;
  for (int x : segment.nodes) {
    if (x == huge_node || node_class(state.cover, cg, x) != ComponentClass::Cycle) continue;
    if (cg.node_vertices[x].size() <= 5) smalls.push_back(x);
  }
  if (smalls.empty()) {
    // Keep one edge per node pair so the cycle has length at least 3.
    MultiGraph simple(cg.contracted.vertex_count());
    std::set<std::pair<int, int>> pairs;
    for (EdgeId id : segment.edges) {
      const Edge& e = cg.contracted.edge(id);
      if (pairs.insert(std::minmax(e.u, e.v)).second) simple.add_edge_with_id(id, e.u, e.v);
    }
    auto k = shortest_cycle_through_vertex(simple, huge_node);
    if (!k) throw Error(ErrorKind::InvariantViolation, "segment has no cycle through the huge node");
    auto ev = evaluate(g, state, make_edge_set(*k), {});
    if (!ev || ev->delta > 0)
      throw Error(ErrorKind::InvariantViolation, "segment cycle did not merge at non-increasing cost");
    return commit(state, std::move(*ev), GlueKind::NonTrivialSegmentGlue, "segment-cycle");
  }
  for (int a : smalls) {
    std::optional<Evaluated> chosen;
    auto accept = [&](const HugeSmallOutcome& out) {
      EdgeSet remove = component_edges(state.cover, cg, a);
      if (!out.via_path) remove = set_union(remove, component_edges(state.cover, cg, out.other_node));
      EdgeSet add = set_union(make_edge_set(out.cycle), out.replacement);
      auto ev = evaluate(g, state, add, remove);
      if (!ev || ev->delta > 0) return false;
      chosen = std::move(ev);
      return true;
    };
    auto outcome = cycle_through_huge_and_small(g, cg, state.cover, huge_node, a, accept, options);
    if (outcome)
      return commit(state, std::move(*chosen), GlueKind::NonTrivialSegmentGlue,
                    outcome->via_path ? "small-cycle-path" : "small-cycle-pair");
  }
  structured_violation(g, cg.node_vertices[smalls.front()], options, "non-trivial segment");
}

GlueResult glue_all(const MultiGraph& g, const TwoEdgeCover& h, const CreditLedger& ledger,
                    const GlueOptions& options) {
  if (h.bridge_count() > 0) throw Error(ErrorKind::InvalidArgument, "gluing needs a bridgeless cover");
  if (ledger != init_credits(h)) throw Error(ErrorKind::InvariantViolation, "ledger does not match the cover");
  GlueState state{h, ledger};
  GlueResult result;
  result.initial_cost = cost(h, ledger);
  if (state.cover.component_count() > 1) {
    GlueStep first = make_huge(g, state, options);
    // A cover that already has a huge component needs no make-huge step.
    if (first.components_after < first.components_before) result.steps.push_back(std::move(first));
    // The huge component is tracked through one of its vertices.
    VertexId pacman = -1;
    std::size_t most = 0;
    for (const auto& comp : state.cover.decomposition.components)
      if (comp.size() > most) {
        most = comp.size();
        pacman = comp.front();
      }
    while (state.cover.component_count() > 1) {
      ComponentGraph cg = build_component_graph(g, state.cover);
      int l = cg.node_of_vertex[pacman];
      if (static_cast<int>(cg.node_vertices[l].size()) < kHugeVertices)
        throw Error(ErrorKind::InvariantViolation, "the huge component was lost");
      const Segment* home = nullptr;
      auto segments = compute_segments(cg);
      for (const auto& s : segments)
        if (!s.trivial && std::binary_search(s.nodes.begin(), s.nodes.end(), l)) {
          home = &s;
          break;
        }
      GlueStep step = home ? glue_nontrivial_segment(g, state, l, *home, options)
                           : glue_trivial_segment(g, state, l, options);
      if (step.components_after >= step.components_before || step.delta_quarters > 0)
        throw Error(ErrorKind::InvariantViolation, "glue step broke its contract");
      result.steps.push_back(std::move(step));
    }
  }
  result.edges = state.cover.edges;
  result.final_cost = cost(state.cover, state.ledger);
  if (4 * static_cast<std::int64_t>(result.edges.size()) > result.initial_cost.quarters + 4 &&
      result.steps.size() > 0)
    throw Error(ErrorKind::InvariantViolation, "final size exceeds the starting cost plus one");
  return result;
}

}  // namespace tecss
