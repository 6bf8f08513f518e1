#include "tecss/pipeline.hpp"

#include <chrono>
#include <json.hpp>

#include "tecss/contractible.hpp"
#include "tecss/credits.hpp"
#include "tecss/errors.hpp"
#include "tecss/graph_io.hpp"
#include "tecss/oracle.hpp"

namespace tecss {

const char* to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::Off: return "off";
    case OracleMode::Auto: return "auto";
    case OracleMode::Force: return "force";
  }
  return "?";
}

OracleMode parse_oracle_mode(const std::string& text) {
  if (text == "off") return OracleMode::Off;
  if (text == "auto") return OracleMode::Auto;
  if (text == "force") return OracleMode::Force;
  throw Error(ErrorKind::InvalidArgument, "oracle mode must be off, auto or force");
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  Timer(std::map<std::string, double>& sink, const std::string& phase)
      : sink_(sink), phase_(phase), start_(Clock::now()) {}
  ~Timer() { sink_[phase_] += std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

 private:
  std::map<std::string, double>& sink_;
  std::string phase_;
  Clock::time_point start_;
};

class LeafSolver {
 public:
  LeafSolver(const PipelineConfig& cfg, RunReport& report, std::map<std::string, double>& timings)
      : cfg_(cfg), report_(report), timings_(timings) {}

  LeafResult operator()(const MultiGraph& g) {
    const int index = static_cast<int>(report_.leaves.size());
    report_.leaves.emplace_back();
    LeafReport& rec = report_.leaves.back();
    rec.vertices = g.vertex_count();
    rec.edges = g.edge_count();
    const std::string tag = "leaf" + std::to_string(index);
    std::string phase = "cover";
    EdgeSet partial;
    try {
      TwoEdgeCover cover;
      {
        Timer t(timings_, "cover");
        cover = min_triangle_free_cover(g, cfg_.cover);
      }
      rec.cover_size = static_cast<int>(cover.size());
      rec.cover_certified = cover.certified_minimum;
      partial = cover.edges;
      snap(tag + "-cover", g, cover.edges);

      phase = "canonicalize";
      TwoEdgeCover canonical;
      {
        Timer t(timings_, "canonicalize");
        canonical = canonicalize(g, cover);
      }
      partial = canonical.edges;
      CreditLedger ledger = init_credits(canonical);
      LedgerBound bound = check_ledger_bound(canonical, ledger);
      Cost c0 = cost(canonical, ledger);
      rec.canonical_size = static_cast<int>(canonical.size());
      rec.canonical_components = canonical.component_count();
      rec.canonical_bridges = canonical.bridge_count();
      rec.canonical_cost = c0.to_string();
      rec.canonical_cost_quarters = c0.quarters;
      rec.ledger_cost_within = bound.cost_within;
      rec.ledger_complex_chain = bound.complex_chain;
      snap(tag + "-canonical", g, canonical.edges);

      phase = "bridge-cover";
      BridgeCoverResult bridged;
      {
        Timer t(timings_, "bridge-cover");
        bridged = cover_bridges(g, canonical, ledger, cfg_.bridges);
      }
      for (const auto& s : bridged.steps)
        rec.bridge_steps.push_back({s.bridges_before, s.bridges_after, static_cast<int>(s.added.size()),
                                    static_cast<int>(s.removed.size()), s.cost_before.to_string(),
                                    s.cost_after.to_string()});
      rec.bridgeless_cost = cost(bridged.cover, bridged.ledger).to_string();
      partial = bridged.cover.edges;
      snap(tag + "-bridgeless", g, bridged.cover.edges);

      phase = "glue";
      GlueOptions options;
      options.alpha = cfg_.reduction.alpha;
      options.cycle_budget = cfg_.glue_cycle_budget;
      options.oracle_budget = cfg_.reduction.oracle_budget;
      GlueResult glued;
      {
        Timer t(timings_, "glue");
        glued = glue_all(g, bridged.cover, bridged.ledger, options);
      }
      for (const auto& s : glued.steps)
        rec.glue_steps.push_back({to_string(s.kind), s.rule, static_cast<int>(s.added.size()),
                                  static_cast<int>(s.removed.size()), quarters_to_string(s.delta_quarters),
                                  s.delta_quarters, s.components_before, s.components_after});
      rec.glue_initial_cost = glued.initial_cost.to_string();
      rec.glue_final_cost = glued.final_cost.to_string();
      snap(tag + "-glued", g, glued.edges);

      if (!verify_2ecss(g, glued.edges))
        throw Error(ErrorKind::InvariantViolation, "glued cover is not a 2-ECSS of the leaf");
      rec.outcome = "solved";
      rec.final_size = static_cast<int>(glued.edges.size());
      return {glued.edges, std::nullopt, "cover+glue"};
    } catch (const Error& e) {
      const auto& w = e.witness_vertices();
      if (!w.empty() && static_cast<int>(w.size()) < g.vertex_count()) {
        auto cert = certify_contractible(g, w, cfg_.reduction.alpha, cfg_.reduction.oracle_budget);
        if (cert) {
          rec.outcome = "contract-hint";
          return {{}, cert, std::string("contractible witness from ") + phase};
        }
      }
      if (e.kind() == ErrorKind::NotTwoEdgeConnected) throw;
      report_.errors.push_back({phase, to_string(e.kind()), e.what(), index});
      // Keep what the failed phase had built and drop the rest greedily.
      EdgeSet h = greedy_minimal_2ecss(g, g.edge_ids(), partial);
      rec.outcome = "fallback";
      rec.final_size = static_cast<int>(h.size());
      return {h, std::nullopt, "fallback after " + phase};
    }
  }

 private:
  void snap(const std::string& label, const MultiGraph& g, const EdgeSet& h) {
    if (cfg_.snapshot) cfg_.snapshot(label, g, h);
  }

  const PipelineConfig& cfg_;
  RunReport& report_;
  std::map<std::string, double>& timings_;
};

}  // namespace

RunReport run_pipeline(const MultiGraph& g, const PipelineConfig& cfg) {
  RunReport report;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.fingerprint = fingerprint(g);
  report.alpha = cfg.reduction.alpha.to_string();
  report.epsilon = cfg.reduction.epsilon.to_string();
  report.enumeration_budget = cfg.reduction.enumeration_budget;
  report.oracle_mode = to_string(cfg.oracle);
  std::map<std::string, double> timings;
  if (cfg.snapshot) cfg.snapshot("input", g, {});

  ReductionConfig rc = cfg.reduction;
  std::optional<ReductionResult> reduced;
  {
    Timer t(timings, "reduce");
    for (;;) {
      LeafSolver solver(cfg, report, timings);
      try {
        reduced = reduce(g, rc, std::ref(solver));
        break;
      } catch (const Error& e) {
        // Patches existed on every instance we know of; if one is missing,
        // report it and solve again without the large 3-cut branch.
        if (e.kind() != ErrorKind::PatchNotFound || !rc.large_three_cuts) throw;
        report.errors.push_back({"reduce", to_string(e.kind()), e.what(), -1});
        report.leaves.clear();
        rc.large_three_cuts = false;
      }
    }
  }
  report.large_three_cuts = rc.large_three_cuts;
  report.reduction_certified = reduced->certified;
  report.leaf_count = reduced->leaves;
  for (const auto& s : reduced->trace.steps) {
    ++report.step_counts[s.kind];
    if (cfg.record_trace)
      report.trace.push_back(
          {s.kind, s.n, s.m, s.children, s.own, s.stripped, static_cast<int>(s.result.size()), s.detail});
  }
  report.solution = reduced->edges;
  report.final_size = static_cast<int>(reduced->edges.size());
  report.verified = verify_2ecss(g, reduced->edges);
  if (cfg.snapshot) cfg.snapshot("final", g, reduced->edges);

  const bool want_opt = cfg.oracle == OracleMode::Force ||
                        (cfg.oracle == OracleMode::Auto && g.vertex_count() <= cfg.oracle_auto_max_vertices);
  std::optional<std::int64_t> opt;
  if (want_opt) {
    Timer t(timings, "oracle");
    auto r = exact_min_2ecss(g, cfg.reduction.oracle_budget);
    report.opt = r->value;
    report.opt_certified = r->certified;
    if (r->certified) opt = r->value;
  }
  if (opt && *opt > 0) report.ratio = Rational(report.final_size, *opt).to_string();
  ApproxCheck check = verify_approx_bound(*reduced, g.vertex_count(), cfg.reduction, opt);
  report.bound_applies = check.bound_applies;
  report.within_bound = check.within_bound;
  report.bound = check.bound;
  report.certified = reduced->certified && report.errors.empty();
  if (cfg.record_timings) report.timings_ms = timings;
  return report;
}

namespace {

using json = nlohmann::json;

json edges_json(const EdgeSet& s) { return json(s); }

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(0, std::string("report lacks field '") + key + "'");
  return j.at(key).get<T>();
}

json to_j(const PhaseError& e) {
  return {{"phase", e.phase}, {"kind", e.kind}, {"message", e.message}, {"leaf", e.leaf}};
}
PhaseError phase_error_from(const json& j) {
  return {get<std::string>(j, "phase"), get<std::string>(j, "kind"), get<std::string>(j, "message"),
          get<int>(j, "leaf")};
}

json to_j(const BridgeStepRecord& s) {
  return {{"bridges_before", s.bridges_before}, {"bridges_after", s.bridges_after}, {"added", s.added},
          {"removed", s.removed},               {"cost_before", s.cost_before},     {"cost_after", s.cost_after}};
}
BridgeStepRecord bridge_step_from(const json& j) {
  return {get<int>(j, "bridges_before"), get<int>(j, "bridges_after"),       get<int>(j, "added"),
          get<int>(j, "removed"),        get<std::string>(j, "cost_before"), get<std::string>(j, "cost_after")};
}

json to_j(const GlueStepRecord& s) {
  return {{"kind", s.kind},
          {"rule", s.rule},
          {"added", s.added},
          {"removed", s.removed},
          {"delta", s.delta},
          {"delta_quarters", s.delta_quarters},
          {"components_before", s.components_before},
          {"components_after", s.components_after}};
}
GlueStepRecord glue_step_from(const json& j) {
  return {get<std::string>(j, "kind"),          get<std::string>(j, "rule"),  get<int>(j, "added"),
          get<int>(j, "removed"),               get<std::string>(j, "delta"), get<std::int64_t>(j, "delta_quarters"),
          get<int>(j, "components_before"),     get<int>(j, "components_after")};
}

json to_j(const LeafReport& l);
json to_j(const TraceStepRecord& s);

template <class T>
json list(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& x : items) out.push_back(to_j(x));
  return out;
}

template <class F>
auto list_from(const json& j, const char* key, F from) {
  std::vector<decltype(from(json()))> out;
  for (const auto& x : get<json>(j, key)) out.push_back(from(x));
  return out;
}

json to_j(const LeafReport& l) {
  return {{"vertices", l.vertices},
          {"edges", l.edges},
          {"outcome", l.outcome},
          {"cover_size", l.cover_size},
          {"cover_certified", l.cover_certified},
          {"canonical_size", l.canonical_size},
          {"canonical_components", l.canonical_components},
          {"canonical_bridges", l.canonical_bridges},
          {"canonical_cost", l.canonical_cost},
          {"canonical_cost_quarters", l.canonical_cost_quarters},
          {"ledger_cost_within", l.ledger_cost_within},
          {"ledger_complex_chain", l.ledger_complex_chain},
          {"bridge_steps", list(l.bridge_steps)},
          {"bridgeless_cost", l.bridgeless_cost},
          {"glue_steps", list(l.glue_steps)},
          {"glue_initial_cost", l.glue_initial_cost},
          {"glue_final_cost", l.glue_final_cost},
          {"final_size", l.final_size}};
}
LeafReport leaf_from(const json& j) {
  LeafReport l;
  l.vertices = get<int>(j, "vertices");
  l.edges = get<int>(j, "edges");
  l.outcome = get<std::string>(j, "outcome");
  l.cover_size = get<int>(j, "cover_size");
  l.cover_certified = get<bool>(j, "cover_certified");
  l.canonical_size = get<int>(j, "canonical_size");
  l.canonical_components = get<int>(j, "canonical_components");
  l.canonical_bridges = get<int>(j, "canonical_bridges");
  l.canonical_cost = get<std::string>(j, "canonical_cost");
  l.canonical_cost_quarters = get<std::int64_t>(j, "canonical_cost_quarters");
  l.ledger_cost_within = get<bool>(j, "ledger_cost_within");
  l.ledger_complex_chain = get<bool>(j, "ledger_complex_chain");
  l.bridge_steps = list_from(j, "bridge_steps", bridge_step_from);
  l.bridgeless_cost = get<std::string>(j, "bridgeless_cost");
  l.glue_steps = list_from(j, "glue_steps", glue_step_from);
  l.glue_initial_cost = get<std::string>(j, "glue_initial_cost");
  l.glue_final_cost = get<std::string>(j, "glue_final_cost");
  l.final_size = get<int>(j, "final_size");
  return l;
}

json to_j(const TraceStepRecord& s) {
  return {{"kind", s.kind},         {"n", s.n},           {"m", s.m},
          {"children", s.children}, {"own", s.own},       {"stripped", s.stripped},
          {"result_size", s.result_size}, {"detail", s.detail}};
}
TraceStepRecord trace_step_from(const json& j) {
  return {get<std::string>(j, "kind"),       get<int>(j, "n"),          get<int>(j, "m"),
          get<std::vector<int>>(j, "children"), get<EdgeSet>(j, "own"),    get<EdgeSet>(j, "stripped"),
          get<int>(j, "result_size"),        get<std::string>(j, "detail")};
}

}  // namespace

std::string to_json(const RunReport& r) {
  json j;
  j["schema"] = r.schema;
  j["input"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"fingerprint", r.fingerprint}};
  j["config"] = {{"alpha", r.alpha},
                 {"epsilon", r.epsilon},
                 {"enumeration_budget", r.enumeration_budget},
                 {"oracle", r.oracle_mode}};
  json red = {{"certified", r.reduction_certified},
              {"large_three_cuts", r.large_three_cuts},
              {"leaves", r.leaf_count},
              {"step_counts", r.step_counts}};
  if (!r.trace.empty()) red["trace"] = list(r.trace);
  j["reduction"] = red;
  j["leaves"] = list(r.leaves);
  j["errors"] = list(r.errors);
  j["solution"] = edges_json(r.solution);
  j["final_size"] = r.final_size;
  j["verified"] = r.verified;
  json oracle = nullptr;
  if (r.opt) oracle = {{"value", *r.opt}, {"certified", r.opt_certified}};
  j["oracle"] = oracle;
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  j["approx_bound"] = {{"applies", r.bound_applies}, {"within", r.within_bound}, {"bound", r.bound}};
  j["certified"] = r.certified;
  if (!r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
  try {
    RunReport r;
    r.schema = get<int>(j, "schema");
    if (r.schema != 1) throw ParseError(0, "unsupported report schema " + std::to_string(r.schema));
    const json& in = get<json>(j, "input");
    r.vertices = get<int>(in, "vertices");
    r.edges = get<int>(in, "edges");
    r.fingerprint = get<std::string>(in, "fingerprint");
    const json& c = get<json>(j, "config");
    r.alpha = get<std::string>(c, "alpha");
    r.epsilon = get<std::string>(c, "epsilon");
    r.enumeration_budget = get<int>(c, "enumeration_budget");
    r.oracle_mode = get<std::string>(c, "oracle");
    const json& red = get<json>(j, "reduction");
    r.reduction_certified = get<bool>(red, "certified");
    r.large_three_cuts = get<bool>(red, "large_three_cuts");
    r.leaf_count = get<int>(red, "leaves");
    r.step_counts = get<std::map<std::string, int>>(red, "step_counts");
    if (red.contains("trace")) r.trace = list_from(red, "trace", trace_step_from);
    r.leaves = list_from(j, "leaves", leaf_from);
    r.errors = list_from(j, "errors", phase_error_from);
    r.solution = get<EdgeSet>(j, "solution");
    r.final_size = get<int>(j, "final_size");
    r.verified = get<bool>(j, "verified");
    const json& oracle = get<json>(j, "oracle");
    if (!oracle.is_null()) {
      r.opt = get<std::int64_t>(oracle, "value");
      r.opt_certified = get<bool>(oracle, "certified");
    }
    const json& ratio = get<json>(j, "ratio");
    if (!ratio.is_null()) r.ratio = ratio.get<std::string>();
    const json& ab = get<json>(j, "approx_bound");
    r.bound_applies = get<bool>(ab, "applies");
    r.within_bound = get<bool>(ab, "within");
    r.bound = get<std::string>(ab, "bound");
    r.certified = get<bool>(j, "certified");
    if (j.contains("timings_ms")) r.timings_ms = get<std::map<std::string, double>>(j, "timings_ms");
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

}  // namespace tecss
