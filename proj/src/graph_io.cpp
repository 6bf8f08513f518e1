#include "tecss/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "tecss/errors.hpp"

namespace tecss {

namespace {

std::vector<std::int64_t> parse_numbers(std::string_view line, int line_no) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::string_view token = line.substr(i, j - i);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  MultiGraph g;
  bool have_header = false;
  std::int64_t n = 0, m = 0, seen = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto numbers = parse_numbers(line, line_no);
    if (numbers.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (numbers.size() != 2) throw ParseError(line_no, "expected two integers");
    if (!have_header) {
      n = numbers[0];
      m = numbers[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      if (n > 10'000'000 || m > 100'000'000) throw ParseError(line_no, "graph too large");
      g = MultiGraph(static_cast<int>(n));
      have_header = true;
    } else {
      if (seen == m) throw ParseError(line_no, "more edge lines than the header announces");
      for (std::int64_t x : numbers)
        if (x < 0 || x >= n) throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range");
      g.add_edge(static_cast<VertexId>(numbers[0]), static_cast<VertexId>(numbers[1]));
      ++seen;
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  if (seen != m)
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

std::string write_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const MultiGraph& g, const EdgeSet& highlight, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=" << e.id;
    if (set_contains(highlight, e.id))
      out << ", penwidth=3";
    else
      out << ", style=dashed, color=gray";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string fingerprint(const MultiGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : write_graph(g)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tecss
