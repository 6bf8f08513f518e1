#pragma once

#include <string>
#include <string_view>

#include "tecss/graph.hpp"

namespace tecss {

// Text format: a header line "n m", then m lines "u v" with 0-based vertex
// ids. '#' starts a comment; blank lines are skipped. Edge ids follow file
// order. Throws ParseError with the offending line number.
MultiGraph parse_graph(std::string_view text);

// Inverse of parse_graph (edge ids are renumbered in order).
std::string write_graph(const MultiGraph& g);

// Graphviz rendering; edges in `highlight` are drawn bold.
std::string to_dot(const MultiGraph& g, const EdgeSet& highlight, const std::string& name = "g");

// FNV-1a of the canonical text form.
std::string fingerprint(const MultiGraph& g);

}  // namespace tecss
