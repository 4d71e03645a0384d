#pragma once

#include <cstddef>
#include <vector>

#include "lineopt/graph.hpp"

namespace lineopt {

/// L(G) together with the base-edge <-> line-vertex correspondence.
struct LineGraphMap {
  Graph base;
  Graph line;
  std::vector<Vertex> edge_to_vertex;  // indexed by base edge id
  std::vector<EdgeId> vertex_to_edge;  // indexed by line vertex
};

/// Throws Error{EmptyGraph} when g has no edges.
LineGraphMap line_graph(const Graph& g);

using Block = std::vector<Vertex>;  // sorted vertex set

/// Biconnected decomposition plus the major/external vocabulary used for
/// line graphs of trees.
///
/// A block is major when it has at least three vertices. A vertex lying in a
/// single block is external. The major blocks of an external vertex are the
/// major blocks nearest to it (all of them on ties). A major block of order s
/// is external when at least s - 1 external vertices choose it, or when it is
/// the only major block.
struct BlockStructure {
  std::vector<Block> blocks;                   // sorted by smallest member
  std::vector<std::size_t> major_blocks;       // indices into blocks
  std::vector<Vertex> external_vertices;
  std::vector<Vertex> internal_vertices;
  std::vector<std::size_t> external_blocks;    // subset of major_blocks
  /// For external_vertices[i], the indices of its nearest major blocks.
  std::vector<std::vector<std::size_t>> major_blocks_of;
  /// external_vertices attached to each block (empty for non-major blocks).
  std::vector<std::vector<Vertex>> external_vertices_of_block;
};

/// Throws Error{Disconnected} unless lt is connected.
BlockStructure block_structure(const Graph& lt);

/// min over u in b of d(v, u).
std::size_t vertex_block_distance(const Graph& lt, Vertex v, const Block& b);

/// min over pairs of d(u1, u2). Throws Error{NoSecondBlock} if b1 == b2.
std::size_t block_block_distance(const Graph& lt, const Block& b1, const Block& b2);

}  // namespace lineopt
