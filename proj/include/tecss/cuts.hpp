#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tecss/graph.hpp"

namespace tecss {

enum class CutKind { OneCut, TwoIsolating, TwoNonIsolating, ThreeSmall, ThreeLarge };

const char* to_string(CutKind kind);

struct CutCertificate {
  std::vector<VertexId> cut;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  CutKind kind = CutKind::OneCut;
  // Residual components of g - cut, each sorted, ordered by smallest vertex.
  std::vector<std::vector<VertexId>> residual;
  // For three-vertex cuts: whether the residual components can be grouped into
  // two sides with at least 7 vertices each (side_a is then the smaller side).
  bool splittable = false;
};

// Residual components of g - removed (vertices in `removed` excluded).
std::vector<std::vector<VertexId>> residual_components(const MultiGraph& g, const std::vector<VertexId>& removed);

// Classification of `cut` (1 to 3 vertices); absent when g - cut is connected.
std::optional<CutCertificate> classify_cut(const MultiGraph& g, std::vector<VertexId> cut);

// Every k-vertex cut, in lexicographic order of the cut.
std::vector<CutCertificate> enumerate_vertex_cuts(const MultiGraph& g, int k);

// Lexicographically least k-vertex cut of the most significant kind present:
// non-isolating before isolating for k = 2, large before small for k = 3.
std::optional<CutCertificate> find_vertex_cut(const MultiGraph& g, int k);

// Lexicographically least cut of exactly this kind. For ThreeLarge only cuts
// that admit the 7/7 split are returned when `require_split` is set.
std::optional<CutCertificate> find_vertex_cut_of_kind(const MultiGraph& g, CutKind kind, bool require_split = false);

}  // namespace tecss
