// Command-line front end: solve, generate, batch, verify.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "tecss/errors.hpp"
#include "tecss/generate.hpp"
#include "tecss/graph_io.hpp"
#include "tecss/oracle.hpp"
#include "tecss/pipeline.hpp"

using namespace tecss;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInfeasible = 2;
constexpr int kInvariant = 3;

std::string read_input(const std::string& path) {
  std::ostringstream out;
  if (path == "-") {
    out << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    out << in.rdbuf();
  }
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

GeneratorParams parse_params(const std::vector<std::string>& items) {
  GeneratorParams p;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "parameter '" + item + "' is not key=value");
    try {
      p[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "parameter '" + item + "' needs an integer value");
    }
  }
  return p;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::RejectionLimit: return kUsage;
    case ErrorKind::NotTwoEdgeConnected:
    case ErrorKind::Infeasible: return kInfeasible;
    default: return kInvariant;
  }
}

struct SolveArgs {
  std::string input;
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string alpha = "5/4";
  std::string epsilon = "1/24";
  int enum_budget = 12;
  std::string oracle = "auto";
  bool trace = false;
  bool timings = false;
  std::string out;
  std::string dot_dir;
};

int solve(const SolveArgs& a) {
  MultiGraph g;
  if (!a.family.empty()) {
    g = generate(a.family, parse_params(a.params), a.seed);
  } else {
    if (a.input.empty()) throw Error(ErrorKind::InvalidArgument, "give an input graph or --family");
    g = parse_graph(read_input(a.input));
  }
  PipelineConfig cfg;
  cfg.reduction.alpha = Rational::parse(a.alpha);
  cfg.reduction.epsilon = Rational::parse(a.epsilon);
  cfg.reduction.enumeration_budget = a.enum_budget;
  cfg.oracle = parse_oracle_mode(a.oracle);
  cfg.record_trace = a.trace;
  cfg.record_timings = a.timings;
  validate(cfg.reduction);
  int snapshot = 0;
  if (!a.dot_dir.empty()) {
    std::filesystem::create_directories(a.dot_dir);
    cfg.snapshot = [&](const std::string& label, const MultiGraph& h, const EdgeSet& highlight) {
      std::ostringstream name;
      name << std::setw(3) << std::setfill('0') << snapshot++ << "-" << label << ".dot";
      std::ofstream out(std::filesystem::path(a.dot_dir) / name.str());
      std::string id = label;
      for (char& c : id)
        if (c == '-') c = '_';
      out << to_dot(h, highlight, id);
    };
  }
  RunReport report = run_pipeline(g, cfg);
  write_output(a.out, to_json(report));
  if (!report.verified) {
    std::cerr << "error: output is not a 2-edge-connected spanning subgraph\n";
    return kInvariant;
  }
  for (const auto& e : report.errors) std::cerr << "error: " << e.phase << ": " << e.message << "\n";
  return report.errors.empty() ? kOk : kInvariant;
}

struct BatchArgs {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed_start = 0;
  int count = 10;
  int workers = 1;
  int enum_budget = 12;
  std::string oracle = "auto";
  std::string out_dir;
};

// Solves generated instances seed_start .. seed_start + count - 1 on a pool of
// workers. Reports are written and summarized in seed order.
int batch(const BatchArgs& a) {
  const GeneratorParams params = parse_params(a.params);
  PipelineConfig cfg;
  cfg.reduction.enumeration_budget = a.enum_budget;
  cfg.oracle = parse_oracle_mode(a.oracle);
  struct Slot {
    std::optional<RunReport> report;
    std::string error;
    int code = kOk;
  };
  std::vector<Slot> slots(a.count);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < a.count; i = next++) {
      try {
        MultiGraph g = generate(a.family, params, a.seed_start + i);
        slots[i].report = run_pipeline(g, cfg);
      } catch (const Error& e) {
        slots[i].error = e.what();
        slots[i].code = exit_code_for(e.kind());
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(1, a.workers); ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  if (!a.out_dir.empty()) std::filesystem::create_directories(a.out_dir);
  int worst = kOk;
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed_start + i;
    const Slot& s = slots[i];
    if (!s.report) {
      std::cout << "seed " << seed << " error " << s.error << "\n";
      worst = std::max(worst, s.code);
      continue;
    }
    const RunReport& r = *s.report;
    if (!a.out_dir.empty())
      write_output((std::filesystem::path(a.out_dir) / ("seed-" + std::to_string(seed) + ".json")).string(),
                   to_json(r));
    std::cout << "seed " << seed << " n " << r.vertices << " m " << r.edges << " size " << r.final_size << " opt "
              << (r.opt ? std::to_string(*r.opt) : "-") << " ratio " << r.ratio.value_or("-") << " verified "
              << (r.verified ? "yes" : "no") << " errors " << r.errors.size() << "\n";
    if (!r.verified || !r.errors.empty()) worst = std::max(worst, kInvariant);
  }
  return worst;
}

int verify(const std::string& graph_path, const std::string& solution_path) {
  MultiGraph g = parse_graph(read_input(graph_path));
  std::string text = read_input(solution_path);
  EdgeSet h;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    RunReport r = report_from_json(text);
    if (r.fingerprint != fingerprint(g)) {
      std::cerr << "error: report was produced for a different graph\n";
      return kUsage;
    }
    h = r.solution;
  } else {
    std::istringstream in(text);
    std::vector<EdgeId> ids;
    for (EdgeId id; in >> id;) ids.push_back(id);
    if (!in.eof()) throw ParseError(0, "solution must be a list of edge ids");
    h = make_edge_set(ids);
  }
  for (EdgeId id : h)
    if (!g.has_edge(id)) throw ParseError(0, "edge id " + std::to_string(id) + " is not in the graph");
  bool ok = verify_2ecss(g, h);
  std::cout << (ok ? "valid" : "invalid") << " 2-ECSS with " << h.size() << " edges\n";
  return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate minimum 2-edge-connected spanning subgraphs"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Run the pipeline and print a JSON report");
  solve_cmd->add_option("input", sa.input, "Graph file ('-' for stdin)");
  solve_cmd->add_option("--family", sa.family, "Generate the input instead")
      ->check(CLI::IsMember(generator_families()));
  solve_cmd->add_option("--param", sa.params, "Generator parameter key=value (repeatable)");
  solve_cmd->add_option("--seed", sa.seed, "Generator seed");
  solve_cmd->add_option("--alpha", sa.alpha, "Contractibility factor, at least 5/4")->capture_default_str();
  solve_cmd->add_option("--epsilon", sa.epsilon, "Accuracy, in (0, 1/24]")->capture_default_str();
  solve_cmd->add_option("--enum-budget", sa.enum_budget, "Largest vertex count solved exactly")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--oracle", sa.oracle, "Compute the optimum: off, auto or force")
      ->capture_default_str()
      ->check(CLI::IsMember({"off", "auto", "force"}));
  solve_cmd->add_flag("--trace", sa.trace, "Include the reduction trace in the report");
  solve_cmd->add_flag("--timings", sa.timings, "Include wall times per phase (reports stop being reproducible)");
  solve_cmd->add_option("--out", sa.out, "Report path (default stdout)");
  solve_cmd->add_option("--dot-dir", sa.dot_dir, "Write one DOT file per phase snapshot here");

  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Print a generated instance in the graph text format");
  gen_cmd->add_option("--family", family, "Instance family")->required()->check(CLI::IsMember(generator_families()));
  gen_cmd->add_option("--param", params, "Parameter key=value (repeatable)");
  gen_cmd->add_option("--seed", seed, "Seed");
  gen_cmd->add_option("--out", gen_out, "Output path (default stdout)");

  BatchArgs ba;
  auto* batch_cmd = app.add_subcommand("batch", "Solve a range of generated instances, one summary line each");
  batch_cmd->add_option("--family", ba.family, "Instance family")->required()->check(CLI::IsMember(generator_families()));
  batch_cmd->add_option("--param", ba.params, "Parameter key=value (repeatable)");
  batch_cmd->add_option("--seed", ba.seed_start, "First seed");
  batch_cmd->add_option("--count", ba.count, "Number of seeds")->capture_default_str()->check(CLI::PositiveNumber);
  batch_cmd->add_option("--workers", ba.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  batch_cmd->add_option("--enum-budget", ba.enum_budget, "Largest vertex count solved exactly")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  batch_cmd->add_option("--oracle", ba.oracle, "Compute the optimum: off, auto or force")
      ->capture_default_str()
      ->check(CLI::IsMember({"off", "auto", "force"}));
  batch_cmd->add_option("--out-dir", ba.out_dir, "Write each report as seed-<n>.json here");

  std::string graph_path, solution_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a solution is a 2-ECSS of a graph");
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("solution", solution_path, "Report JSON or whitespace-separated edge ids")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return solve(sa);
    if (*gen_cmd) {
      write_output(gen_out, write_graph(generate(family, parse_params(params), seed)));
      return kOk;
    }
    if (*verify_cmd) return verify(graph_path, solution_path);
    if (*batch_cmd) return batch(ba);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
