#pragma once

#include <vector>

#include "tecss/graph.hpp"

namespace tecss {

// Connected-component label per vertex (isolated vertices get their own label).
// Labels are numbered in order of the smallest vertex of each component.
std::vector<int> component_labels(const MultiGraph& g, int* count = nullptr);
bool is_connected(const MultiGraph& g);

EdgeSet find_bridges(const MultiGraph& g);
std::vector<VertexId> articulation_points(const MultiGraph& g);
// Edge sets of the maximal 2-vertex-connected pieces (a bridge forms its own
// piece). Self-loops are ignored.
std::vector<EdgeSet> biconnected_components(const MultiGraph& g);

// Connected, spanning all vertices of g, no bridges. Self-loops are ignored.
bool is_two_edge_connected(const MultiGraph& g);
// Same test for the spanning subgraph (V(g), subset).
bool is_two_edge_connected(const MultiGraph& g, const EdgeSet& subset);

// Label of the 2-edge-connected class of every vertex (vertices linked by a
// bridge-free path share a label).
std::vector<int> two_edge_class_labels(const MultiGraph& g, int* count = nullptr);

// Variants over the edges whose index (position in g.edges()) is flagged in
// `mask`. They avoid building a subgraph inside search loops.
bool is_two_edge_connected_mask(const MultiGraph& g, const std::vector<char>& mask);
std::vector<int> two_edge_class_labels_mask(const MultiGraph& g, const std::vector<char>& mask, int* count = nullptr);
// Per edge index: 1 when the edge is a bridge of the masked subgraph.
std::vector<char> bridge_mask(const MultiGraph& g, const std::vector<char>& mask);

struct MaskSummary {
  int components = 0;  // isolated vertices included
  int bridges = 0;
  int cut_vertices_in_bridgeless = 0;  // cut vertices lying in bridgeless components
};
MaskSummary summarize_mask(const MultiGraph& g, const std::vector<char>& mask);

struct BlockDecomposition {
  std::vector<std::vector<VertexId>> components;
  std::vector<EdgeSet> component_edges;
  std::vector<bool> component_complex;
  std::vector<int> component_of_vertex;
  std::vector<EdgeSet> blocks;
  std::vector<std::vector<VertexId>> block_vertices;
  std::vector<int> block_component;
  std::vector<bool> pendant_flags;
  EdgeSet bridges;
  std::vector<VertexId> cut_vertices;

  int complex_count() const;
};

// Decomposition of the spanning subgraph (V(g), h). Blocks are the maximal
// 2-edge-connected pieces that contain at least one non-loop edge; a vertex
// touched only by bridges belongs to no block. Loops belong to no block.
BlockDecomposition decompose(const MultiGraph& g, const EdgeSet& h);
BlockDecomposition decompose(const MultiGraph& g);

}  // namespace tecss
