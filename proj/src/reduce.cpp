#include "tecss/reduce.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "tecss/connectivity.hpp"
#include "tecss/cuts.hpp"
#include "tecss/errors.hpp"

namespace tecss {

void validate(const ReductionConfig& cfg) {
  if (cfg.alpha < Rational(5, 4)) throw Error(ErrorKind::InvalidArgument, "alpha must be at least 5/4");
  const Rational top = cfg.check_parameters ? Rational(1, 24) : Rational(1);
  if (cfg.epsilon <= Rational(0) || cfg.epsilon > top || (!cfg.check_parameters && cfg.epsilon == top))
    throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1/24]");
  if (cfg.enumeration_budget < 1) throw Error(ErrorKind::InvalidArgument, "enumeration budget must be positive");
}

const char* to_string(SolutionType t) {
  switch (t) {
    case SolutionType::A: return "A";
    case SolutionType::B1: return "B1";
    case SolutionType::B2: return "B2";
    case SolutionType::C1: return "C1";
    case SolutionType::C2: return "C2";
    case SolutionType::C3: return "C3";
  }
  return "?";
}

std::vector<SolutionType> compatible_types(SolutionType t) {
  using T = SolutionType;
  switch (t) {
    case T::A: return {T::A, T::B1, T::B2, T::C1, T::C2, T::C3};
    case T::B1: return {T::A, T::B1, T::B2, T::C1, T::C2};
    case T::B2: return {T::A, T::B1, T::B2};
    case T::C1: return {T::A, T::B1, T::C1};
    case T::C2: return {T::A, T::B1};
    case T::C3: return {T::A};
  }
  return {};
}

SolutionType classify_solution_type(const MultiGraph& g, const EdgeSet& h, const std::array<VertexId, 3>& cut) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId id : h) mask[*g.index_of(id)] = 1;
  int classes = 0, comps = 0;
  auto cls = two_edge_class_labels_mask(g, mask, &classes);
  auto comp = component_labels(edge_subgraph(g, h), &comps);
  std::vector<int> class_comp(classes), terminals(classes, 0), tree_degree(classes, 0), class_count(comps, 0);
  for (VertexId x = 0; x < g.vertex_count(); ++x) class_comp[cls[x]] = comp[x];
  for (int c = 0; c < classes; ++c) ++class_count[class_comp[c]];
  for (VertexId t : cut) ++terminals[cls[t]];
  for (EdgeId id : h) {
    const Edge& e = g.edge(id);
    if (cls[e.u] != cls[e.v]) {
      ++tree_degree[cls[e.u]];
      ++tree_degree[cls[e.v]];
    }
  }
  std::vector<int> comp_terminals(comps, 0), comp_terminal_classes(comps, 0);
  for (int c = 0; c < classes; ++c) {
    comp_terminals[class_comp[c]] += terminals[c];
    if (terminals[c] > 0) ++comp_terminal_classes[class_comp[c]];
    // Every leaf of a component's super-node tree must hold a cut vertex.
    if (class_count[class_comp[c]] > 1 && tree_degree[c] <= 1 && terminals[c] == 0)
      throw Error(ErrorKind::Untypeable, "a leaf super-node holds no cut vertex");
  }
  for (int c = 0; c < comps; ++c)
    if (comp_terminals[c] == 0) throw Error(ErrorKind::Untypeable, "a component holds no cut vertex");
  if (comps == 1) {
    if (comp_terminal_classes[0] == 1) return SolutionType::A;
    return comp_terminal_classes[0] == 2 ? SolutionType::B1 : SolutionType::C1;
  }
  if (comps == 2) {
    int pair = comp_terminals[0] == 2 ? 0 : 1;
    return comp_terminal_classes[pair] == 1 ? SolutionType::B2 : SolutionType::C2;
  }
  return SolutionType::C3;
}

std::optional<EdgeSet> enumerate_min_typed_subgraph(const MultiGraph& g, const std::array<VertexId, 3>& cut,
                                                    SolutionType t,
                                                    const std::function<bool(const EdgeSet&)>& compatible,
                                                    std::int64_t budget) {
  std::vector<int> edges;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!g.edge_at(i).is_loop()) edges.push_back(i);
  const int m = static_cast<int>(edges.size());
  std::vector<char> is_cut(g.vertex_count(), 0);
  for (VertexId x : cut) is_cut[x] = 1;
  // Vertices off the cut need degree 2.
  std::vector<int> need(g.vertex_count(), 0);
  int deficit = 0;
  for (VertexId x = 0; x < g.vertex_count(); ++x)
    if (!is_cut[x]) {
      need[x] = 2;
      deficit += 2;
    }
  std::int64_t visited = 0;
  EdgeSet chosen;
  std::optional<EdgeSet> found;
  auto dfs = [&](auto&& self, int from, int left) -> bool {
    if (++visited > budget) throw Error(ErrorKind::BudgetExceeded, "typed enumeration budget exhausted");
    if (deficit > 2 * left) return false;
    if (left == 0) {
      EdgeSet h = make_edge_set(chosen);
      try {
        if (classify_solution_type(g, h, cut) != t) return false;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Untypeable) throw;
        return false;
      }
      if (!compatible(h)) return false;
      found = h;
      return true;
    }
    for (int i = from; i + left <= m; ++i) {
      const Edge& e = g.edge_at(edges[i]);
      int gain = (need[e.u] > 0) + (need[e.v] > 0);
      --need[e.u];
      --need[e.v];
      deficit -= gain;
      chosen.push_back(e.id);
      bool done = self(self, i + 1, left - 1);
      chosen.pop_back();
      deficit += gain;
      ++need[e.u];
      ++need[e.v];
      if (done) return true;
    }
    return false;
  };
  for (int k = 0; k <= m; ++k)
    if (dfs(dfs, 0, k)) return found;
  return std::nullopt;
}

std::optional<EdgeSet> find_patch(const MultiGraph& g, const EdgeSet& h, int max_size) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId id : h) mask[*g.index_of(id)] = 1;
  int classes = 0;
  auto cls = two_edge_class_labels_mask(g, mask, &classes);
  MultiGraph base(classes);
  for (EdgeId id : h) {
    const Edge& e = g.edge(id);
    if (cls[e.u] != cls[e.v]) base.add_edge(cls[e.u], cls[e.v]);
  }
  // Edges joining the same two classes are interchangeable; two copies suffice.
  std::map<std::pair<int, int>, int> copies;
  std::vector<const Edge*> candidates;
  for (const auto& e : g.edges()) {
    if (mask[*g.index_of(e.id)] || cls[e.u] == cls[e.v]) continue;
    auto key = std::minmax(cls[e.u], cls[e.v]);
    if (copies[key]++ < 2) candidates.push_back(&e);
  }
  const int c = static_cast<int>(candidates.size());
  std::vector<int> pick;
  std::optional<EdgeSet> found;
  auto test = [&]() {
    MultiGraph q = base;
    for (int i : pick) q.add_edge(cls[candidates[i]->u], cls[candidates[i]->v]);
    for (VertexId x = 0; x < classes; ++x)
      if (classes > 1 && q.degree(x) < 2) return false;
    return is_two_edge_connected(q);
  };
  auto dfs = [&](auto&& self, int from, int left) -> bool {
    if (left == 0) {
      if (!test()) return false;
      EdgeSet f;
      for (int i : pick) f.push_back(candidates[i]->id);
      found = make_edge_set(f);
      return true;
    }
    for (int i = from; i + left <= c; ++i) {
      pick.push_back(i);
      if (self(self, i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 0; k <= max_size; ++k)
    if (dfs(dfs, 0, k)) return found;
  return std::nullopt;
}

EdgeSet irrelevant_edges(const MultiGraph& g) {
  EdgeSet out;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (residual_components(g, {e.u, e.v}).size() >= 2) out.push_back(e.id);
  }
  return out;
}

bool ReductionTrace::replay_ok() const {
  for (const auto& s : steps) {
    EdgeSet acc = s.own;
    for (int c : s.children) acc = set_union(acc, steps[c].result);
    if (set_difference(acc, s.stripped) != s.result) return false;
  }
  return true;
}

int ReductionTrace::count(const std::string& kind) const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [&](const TraceStep& s) { return s.kind == kind; }));
}

LeafResult exact_leaf_solver(const MultiGraph& g) {
  auto r = exact_min_2ecss(g);
  return {r->witness, std::nullopt, r->certified ? "exact" : "exact-uncertified"};
}

namespace {

std::vector<VertexId> with_cut(std::vector<VertexId> side, const std::vector<VertexId>& cut) {
  side.insert(side.end(), cut.begin(), cut.end());
  std::sort(side.begin(), side.end());
  return side;
}

std::vector<VertexId> local_vertices(const InducedSubgraph& s, const std::vector<VertexId>& host) {
  std::vector<VertexId> out;
  for (VertexId v : host) out.push_back(s.from_host[v]);
  return out;
}

struct Typed {
  EdgeSet x;
  SolutionType type;
};

// Edge sets X of G1 such that X + E(G2) is 2EC spanning, of minimum size k
// and of size k + 1, found by partitioning the solution space on the
// oracle's optimum. G2 is replaced by the contraction of its 2-edge classes.
class SideEnumerator {
 public:
  SideEnumerator(const MultiGraph& g, const EdgeSet& e2, const MultiGraph& g1, const std::array<VertexId, 3>& cut1,
                 const ReductionConfig& cfg)
      : g1_(g1), cut1_(cut1), cfg_(cfg) {
    std::vector<char> mask(g.edge_count(), 0);
    for (EdgeId id : e2) mask[*g.index_of(id)] = 1;
    int classes = 0;
    auto cls = two_edge_class_labels_mask(g, mask, &classes);
    small_ = MultiGraph(classes);
    for (const auto& e : g.edges())
      if (cls[e.u] != cls[e.v]) {
        small_.add_edge_with_id(e.id, cls[e.u], cls[e.v]);
        if (set_contains(e2, e.id)) fixed_.push_back(e.id);
      }
    small_.reserve_ids(g.next_edge_id());
    e1_ = g1.edge_ids();
  }

  void run() {
    auto root = solve({}, {});
    if (!root) throw Error(ErrorKind::InvariantViolation, "no side solution behind a 3-vertex cut");
    k_ = static_cast<int>(root->size());
    auto cmp = [](const Node& a, const Node& b) {
      if (a.x.size() != b.x.size()) return a.x.size() > b.x.size();
      return a.x > b.x;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
    heap.push({*root, {}, {}});
    const std::size_t limit = k_ + 1;
    std::set<EdgeSet> seen;
    while (!heap.empty()) {
      if (static_cast<int>(found_.size()) >= cfg_.typed_solution_cap || calls_ >= cfg_.typed_oracle_calls) {
        complete_ = false;
        break;
      }
      Node node = heap.top();
      heap.pop();
      if (node.x.size() > limit) break;
      if (seen.insert(node.x).second) found_.push_back(node.x);
      EdgeSet free = set_difference(node.x, node.include);
      EdgeSet include = node.include;
      for (EdgeId f : free) {
        EdgeSet exclude = set_union(node.exclude, {f});
        auto s = solve(include, exclude);
        if (s && s->size() <= limit) heap.push({*s, include, exclude});
        include = set_union(include, {f});
      }
    }
    // Supersets of minimum solutions by one edge are never optimal in a
    // subproblem, so they are added directly.
    std::vector<EdgeSet> minimum;
    for (const auto& x : found_)
      if (static_cast<int>(x.size()) == k_) minimum.push_back(x);
    for (const auto& x : minimum)
      for (EdgeId e : set_difference(e1_, x)) {
        EdgeSet y = set_union(x, {e});
        if (seen.insert(y).second) found_.push_back(y);
      }
    std::sort(found_.begin(), found_.end(), [](const EdgeSet& a, const EdgeSet& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (const auto& x : found_) typed_.push_back({x, classify_solution_type(g1_, x, cut1_)});
  }

  int minimum_size() const { return k_; }
  bool complete() const { return complete_ && certified_; }
  const std::vector<Typed>& solutions() const { return typed_; }

  // Solutions of type t of the smallest size that type reaches.
  std::vector<EdgeSet> best_of(SolutionType t) const {
    std::vector<EdgeSet> out;
    for (const auto& s : typed_) {
      if (s.type != t) continue;
      if (!out.empty() && s.x.size() > out.front().size()) break;
      out.push_back(s.x);
    }
    return out;
  }

 private:
  struct Node {
    EdgeSet x, include, exclude;
  };

  std::optional<EdgeSet> solve(const EdgeSet& include, const EdgeSet& exclude) {
    ++calls_;
    MultiGraph h = remove_edges(small_, exclude);
    try {
      auto r = exact_min_2ecss_with_fixed(h, set_union(fixed_, include), cfg_.oracle_budget);
      if (!r->certified) certified_ = false;
      return set_difference(r->witness, fixed_);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Infeasible) throw;
      return std::nullopt;
    }
  }

  const MultiGraph& g1_;
  std::array<VertexId, 3> cut1_;
  const ReductionConfig& cfg_;
  MultiGraph small_;
  EdgeSet fixed_, e1_;
  int k_ = 0;
  int calls_ = 0;
  bool complete_ = true;
  bool certified_ = true;
  std::vector<EdgeSet> found_;
  std::vector<Typed> typed_;
};

class Reducer {
 public:
  Reducer(const ReductionConfig& cfg, const StructuredSolver& solver) : cfg_(cfg), solver_(solver) {}

  int run(const MultiGraph& g, int depth) {
    const int idx = static_cast<int>(trace_.steps.size());
    trace_.steps.push_back({});
    TraceStep step;
    step.n = g.vertex_count();
    step.m = g.edge_count();
    if (!is_two_edge_connected(g)) {
      if (depth == 0) throw Error(ErrorKind::NotTwoEdgeConnected, "input graph is not 2-edge-connected");
      throw Error(ErrorKind::InvariantViolation, "a reduced graph lost 2-edge-connectivity");
    }
    dispatch(g, depth, step);
    EdgeSet acc = step.own;
    for (int c : step.children) acc = set_union(acc, trace_.steps[c].result);
    step.result = set_difference(acc, step.stripped);
    if (!verify_2ecss(g, step.result))
      throw Error(ErrorKind::InvariantViolation, "step '" + step.kind + "' returned an infeasible subgraph");
    trace_.steps[idx] = std::move(step);
    return idx;
  }

  bool certified() const { return certified_; }
  int leaves() const { return leaves_; }
  ReductionTrace take_trace() { return std::move(trace_); }

 private:
  const EdgeSet& child(const MultiGraph& parent, const MultiGraph& g, int depth, TraceStep& step) {
    if (g.vertex_count() > parent.vertex_count() ||
        (g.vertex_count() == parent.vertex_count() && g.edge_count() >= parent.edge_count()))
      throw Error(ErrorKind::InvariantViolation, "reduction did not shrink the graph");
    int c = run(g, depth + 1);
    step.children.push_back(c);
    return trace_.steps[c].result;
  }

  void dispatch(const MultiGraph& g, int depth, TraceStep& step) {
    const int n = g.vertex_count();
    const std::int64_t four_over_eps = (Rational(4) / cfg_.epsilon).floor();
    if (n <= 1) {
      step.kind = "exact";
      return;
    }
    if (n <= std::min<std::int64_t>(four_over_eps, cfg_.enumeration_budget)) {
      auto r = exact_min_2ecss(g, cfg_.oracle_budget);
      step.kind = "exact";
      step.own = r->witness;
      if (!r->certified) {
        certified_ = false;
        step.detail = "oracle budget exhausted";
      }
      return;
    }
    if (n <= four_over_eps) certified_ = false;  // above n0 but inside the exact regime

    auto aps = articulation_points(g);
    if (!aps.empty()) {
      VertexId v = aps.front();
      auto parts = residual_components(g, {v});
      std::vector<VertexId> rest;
      for (std::size_t i = 1; i < parts.size(); ++i) rest.insert(rest.end(), parts[i].begin(), parts[i].end());
      step.kind = "one-cut";
      step.detail = "cut vertex " + std::to_string(v);
      child(g, induced_subgraph(g, with_cut(parts[0], {v})).graph, depth, step);
      child(g, induced_subgraph(g, with_cut(rest, {v})).graph, depth, step);
      return;
    }

    EdgeSet redundant;
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : g.edges())
      if (e.is_loop() || !pairs.insert(std::minmax(e.u, e.v)).second) redundant.push_back(e.id);
    if (!redundant.empty()) {
      step.kind = "loops-parallels";
      step.detail = std::to_string(redundant.size()) + " edges";
      child(g, remove_edges(g, redundant), depth, step);
      return;
    }

    const int max_c = static_cast<int>(
        std::min<std::int64_t>((Rational(2) / cfg_.epsilon).floor(), cfg_.contractible_max_vertices));
    if (auto cert = find_contractible_certificate(g, cfg_.alpha, max_c, cfg_.oracle_budget)) {
      contract(g, *cert, "contract", depth, step);
      return;
    }

    EdgeSet irrelevant = irrelevant_edges(g);
    if (!irrelevant.empty()) {
      step.kind = "irrelevant";
      step.detail = std::to_string(irrelevant.size()) + " edges";
      child(g, remove_edges(g, irrelevant), depth, step);
      return;
    }

    if (auto cut = find_vertex_cut_of_kind(g, CutKind::TwoNonIsolating)) {
      two_cut(g, *cut, depth, step);
      return;
    }

    if (cfg_.large_three_cuts)
      if (auto cut = find_vertex_cut_of_kind(g, CutKind::ThreeLarge, true)) {
        large_three_cut(g, *cut, depth, step);
        return;
      }

    LeafResult leaf = solver_(g);
    if (leaf.contract_hint) {
      const auto& hint = *leaf.contract_hint;
      if (hint.vertices.size() >= 2 && static_cast<int>(hint.vertices.size()) < n &&
          verify_2ecss(induced_subgraph(g, hint.vertices).graph, hint.subgraph)) {
        contract(g, hint, "contract-feedback", depth, step);
        return;
      }
      throw Error(ErrorKind::InvariantViolation, "leaf solver returned an invalid contraction hint");
    }
    ++leaves_;
    step.kind = "structured-leaf";
    step.own = leaf.edges;
    step.detail = leaf.note;
  }

  void contract(const MultiGraph& g, const ContractibleCertificate& cert, const std::string& kind, int depth,
                TraceStep& step) {
    step.kind = kind;
    step.own = cert.subgraph;
    step.detail = std::to_string(cert.vertices.size()) + " vertices, basis " + to_string(cert.basis);
    child(g, tecss::contract(g, cert.vertices).result, depth, step);
  }

  // Sides closed under the cut and with the cut contracted; chords go to side one.
  struct Sides {
    InducedSubgraph s1, s2;
    MultiGraph g2;  // s2 without edges inside the cut
    std::vector<VertexId> cut1, cut2;
  };

  Sides split(const MultiGraph& g, const CutCertificate& cut) {
    Sides s;
    s.s1 = induced_subgraph(g, with_cut(cut.side_a, cut.cut));
    s.s2 = induced_subgraph(g, with_cut(cut.side_b, cut.cut));
    s.cut1 = local_vertices(s.s1, cut.cut);
    s.cut2 = local_vertices(s.s2, cut.cut);
    EdgeSet chords;
    for (const auto& e : s.s2.graph.edges())
      if (std::count(s.cut2.begin(), s.cut2.end(), e.u) && std::count(s.cut2.begin(), s.cut2.end(), e.v))
        chords.push_back(e.id);
    s.g2 = remove_edges(s.s2.graph, chords);
    return s;
  }

  void two_cut(const MultiGraph& g, const CutCertificate& cut, int depth, TraceStep& step) {
    certified_ = false;
    step.kind = "two-cut";
    Sides s = split(g, cut);
    EdgeSet h = child(g, tecss::contract(s.s1.graph, s.cut1).result, depth, step);
    h = set_union(h, child(g, tecss::contract(s.g2, s.cut2).result, depth, step));
    auto f = find_patch(g, h, 4);
    if (f) {
      step.own = *f;
      step.detail = "patch " + std::to_string(f->size());
      return;
    }
    // Every edge may be needed; keep the sides and drop what the rest allows.
    EdgeSet all = greedy_minimal_2ecss(g, g.edge_ids(), h);
    step.own = set_difference(all, h);
    step.detail = "patch overflow " + std::to_string(step.own.size());
  }

  void large_three_cut(const MultiGraph& g, const CutCertificate& cut, int depth, TraceStep& step) {
    Sides s = split(g, cut);
    const int v1 = static_cast<int>(cut.side_a.size());
    std::ostringstream detail;
    detail << "cut " << cut.cut[0] << "," << cut.cut[1] << "," << cut.cut[2] << " |V1|=" << v1;
    if (Rational(v1 + 4) > Rational(2) / cfg_.epsilon) {
      step.kind = "three-cut-both-large";
      EdgeSet h = child(g, tecss::contract(s.s1.graph, s.cut1).result, depth, step);
      h = set_union(h, child(g, tecss::contract(s.g2, s.cut2).result, depth, step));
      auto f = find_patch(g, h, 4);
      if (!f) throw Error(ErrorKind::PatchNotFound, "no patch of at most 4 edges joins the two sides", cut.cut);
      step.own = *f;
      detail << " patch " << f->size();
      step.detail = detail.str();
      return;
    }

    std::array<VertexId, 3> cut1{s.cut1[0], s.cut1[1], s.cut1[2]};
    SideEnumerator side(g, s.g2.edge_ids(), s.s1.graph, cut1, cfg_);
    side.run();
    if (!side.complete()) {
      certified_ = false;
      detail << " enumeration capped";
    }
    const int k = side.minimum_size();
    SolutionType tmin = SolutionType::C3;
    for (const auto& t : side.solutions())
      if (static_cast<int>(t.x.size()) == k && t.type < tmin) tmin = t.type;
    detail << " k=" << k << " tmin=" << to_string(tmin);

    std::optional<EdgeSet> h2;
    int h2_step = -1;
    auto contracted_side = [&]() -> const EdgeSet& {
      if (!h2) {
        h2 = child(g, tecss::contract(s.g2, s.cut2).result, depth, step);
        h2_step = step.children.back();
      }
      return *h2;
    };
    auto patch_with = [&](const std::vector<EdgeSet>& options, int bound) -> bool {
      for (const auto& x : options) {
        auto f = find_patch(g, set_union(x, contracted_side()), bound);
        if (f) {
          step.own = set_union(x, *f);
          detail << " |X|=" << x.size() << " patch " << f->size();
          return true;
        }
      }
      return false;
    };

    auto b1 = side.best_of(SolutionType::B1);
    if (!b1.empty() && static_cast<int>(b1.front().size()) <= k + 1) {
      step.kind = "three-cut-B1";
      if (patch_with(b1, 1)) {
        step.detail = detail.str();
        return;
      }
      if (tmin != SolutionType::A)
        throw Error(ErrorKind::PatchNotFound, "B1 side solutions admit no 1-edge patch", cut.cut);
      // The recursive call on the contracted side is not needed below.
      step.children.clear();
    }

    switch (tmin) {
      case SolutionType::A: {
        // X spans V(G1) 2-edge-connectedly at the minimum, so opt(G) equals
        // |X| + opt(G | V(G1)).
        step.kind = "three-cut-A";
        EdgeSet x = side.best_of(SolutionType::A).front();
        step.own = x;
        child(g, tecss::contract(g, with_cut(cut.side_a, cut.cut)).result, depth, step);
        break;
      }
      case SolutionType::B1:
        throw Error(ErrorKind::InvariantViolation, "minimum type B1 without the B1 branch");
      case SolutionType::B2:
      case SolutionType::C1: {
        step.kind = tmin == SolutionType::B2 ? "three-cut-B2" : "three-cut-C1";
        if (!patch_with(side.best_of(tmin), 2))
          throw Error(ErrorKind::PatchNotFound, std::string(to_string(tmin)) + " side admits no 2-edge patch", cut.cut);
        break;
      }
      case SolutionType::C2:
        c2_branch(g, s, cut, side.best_of(SolutionType::C2), depth, step, detail);
        break;
      case SolutionType::C3:
        c3_branch(g, s, cut, side.best_of(SolutionType::C3), depth, step, detail);
        break;
    }
    step.detail = detail.str();
  }

  // Host vertex sets of the components of x inside G1.
  static std::vector<int> component_of(const InducedSubgraph& s1, const EdgeSet& x) {
    return component_labels(edge_subgraph(s1.graph, x));
  }

  struct Gadget {
    MultiGraph graph;
    EdgeSet dummies;
  };

  // G2 plus dummy vertices and edges; `pairs` name host cut vertices or -1, -2
  // for the first and second dummy vertex.
  static Gadget gadget(const Sides& s, int extra_vertices, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    Gadget out{s.g2, {}};
    std::vector<VertexId> dummy;
    for (int i = 0; i < extra_vertices; ++i) dummy.push_back(out.graph.add_vertex());
    auto local = [&](VertexId x) { return x < 0 ? dummy[-x - 1] : s.s2.from_host[x]; };
    for (auto [a, b] : pairs) out.dummies.push_back(out.graph.add_edge(local(a), local(b)));
    return out;
  }

  void c2_branch(const MultiGraph& g, const Sides& s, const CutCertificate& cut, const std::vector<EdgeSet>& sols,
                 int depth, TraceStep& step, std::ostringstream& detail) {
    // Terminal pair joined by the path component of each minimum solution.
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& x : sols) {
      auto comp = component_of(s.s1, x);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (comp[s.cut1[i]] == comp[s.cut1[j]]) pairs.insert({cut.cut[i], cut.cut[j]});
    }
    std::vector<std::pair<VertexId, VertexId>> dummy_edges;
    int extra = 1;
    int bound = -2;
    const auto& c = cut.cut;
    if (pairs.size() == 1) {
      auto [u, v] = *pairs.begin();
      VertexId w = c[0] + c[1] + c[2] - u - v;
      step.kind = "three-cut-C2-i";
      dummy_edges = {{u, -1}, {v, -1}, {v, w}};
    } else if (pairs.size() == 2) {
      auto it = pairs.begin();
      auto p = *it++;
      auto q = *it;
      VertexId v = (p.first == q.first || p.first == q.second) ? p.first : p.second;
      std::vector<VertexId> others;
      for (VertexId x : c)
        if (x != v) others.push_back(x);
      step.kind = "three-cut-C2-ii";
      extra = 2;
      bound = -3;
      dummy_edges = {{others[0], -1}, {v, -2}, {-2, -1}, {others[1], -1}};
    } else {
      step.kind = "three-cut-C2-iii";
      dummy_edges = {{c[0], -1}, {c[1], -1}, {c[2], -1}};
    }
    Gadget gd = gadget(s, extra, dummy_edges);
    const EdgeSet& r = child(g, gd.graph, depth, step);
    step.stripped = gd.dummies;
    EdgeSet h2 = set_difference(r, gd.dummies);
    const int used = static_cast<int>(set_intersection(r, gd.dummies).size());
    for (const auto& x : sols) {
      auto f = find_patch(g, set_union(x, h2), 1);
      if (f && static_cast<int>(f->size()) - used <= bound) {
        step.own = set_union(x, *f);
        detail << " pairs=" << pairs.size() << " |X|=" << x.size() << " patch " << f->size() << " dummies used "
               << used;
        return;
      }
    }
    throw Error(ErrorKind::PatchNotFound, "C2 side admits no patch within the accounting bound", cut.cut);
  }

  void c3_branch(const MultiGraph& g, const Sides& s, const CutCertificate& cut, const std::vector<EdgeSet>& sols,
                 int depth, TraceStep& step, std::ostringstream& detail) {
    step.kind = "three-cut-C3";
    struct Run {
      int step;
      EdgeSet result, dummies;
    };
    std::map<int, Run> by_middle;
    for (const auto& x : sols) {
      auto comp = component_of(s.s1, x);
      auto joined = [&](int i, int j) {
        for (const auto& e : s.s1.graph.edges()) {
          int a = comp[e.u], b = comp[e.v];
          int ci = comp[s.cut1[i]], cj = comp[s.cut1[j]];
          if ((a == ci && b == cj) || (a == cj && b == ci)) return true;
        }
        return false;
      };
      for (int mid = 0; mid < 3; ++mid) {
        int a = (mid + 1) % 3, b = (mid + 2) % 3;
        if (!joined(a, mid) || !joined(mid, b)) continue;
        if (!by_middle.count(mid)) {
          VertexId u = cut.cut[a], v = cut.cut[mid], w = cut.cut[b];
          Gadget gd = gadget(s, 0, {{u, v}, {u, v}, {v, w}, {v, w}});
          EdgeSet r = child(g, gd.graph, depth, step);
          by_middle[mid] = {step.children.back(), r, gd.dummies};
        }
        const auto& [run_step, r, dummies] = by_middle[mid];
        EdgeSet h2 = set_difference(r, dummies);
        const int used = static_cast<int>(set_intersection(r, dummies).size());
        auto f = find_patch(g, set_union(x, h2), 4);
        if (f && static_cast<int>(f->size()) - used <= 0) {
          // Only the recursion that produced H2 stays in the trace.
          step.children = {run_step};
          step.stripped = dummies;
          step.own = set_union(x, *f);
          detail << " middle " << cut.cut[mid] << " |X|=" << x.size() << " patch " << f->size()
                 << " dummies used " << used;
          return;
        }
      }
    }
    throw Error(ErrorKind::PatchNotFound, "C3 side admits no patch within the accounting bound", cut.cut);
  }

  const ReductionConfig& cfg_;
  const StructuredSolver& solver_;
  ReductionTrace trace_;
  bool certified_ = true;
  int leaves_ = 0;
};

}  // namespace

ReductionResult reduce(const MultiGraph& g, const ReductionConfig& cfg, const StructuredSolver& solver) {
  validate(cfg);
  Reducer r(cfg, solver);
  int root = r.run(g, 0);
  ReductionResult out;
  out.trace = r.take_trace();
  out.edges = out.trace.steps[root].result;
  out.certified = r.certified() && cfg.check_parameters;
  out.leaves = r.leaves();
  if (!out.trace.replay_ok()) throw Error(ErrorKind::InvariantViolation, "reduction trace does not replay");
  return out;
}

ApproxCheck verify_approx_bound(const ReductionResult& result, int vertex_count, const ReductionConfig& cfg,
                                std::optional<std::int64_t> opt) {
  ApproxCheck c;
  c.size = static_cast<std::int64_t>(result.edges.size());
  c.opt = opt;
  if (opt && *opt > 0) c.ratio = static_cast<double>(c.size) / static_cast<double>(*opt);
  c.bound_applies = opt && result.certified && Rational(vertex_count) > Rational(4) / cfg.epsilon;
  if (c.bound_applies) {
    Rational bound = cfg.alpha * Rational(*opt) + Rational(4) * cfg.epsilon * Rational(vertex_count) - Rational(4);
    c.bound = bound.to_string();
    c.within_bound = Rational(c.size) <= bound;
  }
  return c;
}

}  // namespace tecss
