#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lineopt/graph.hpp"

namespace lineopt {

/// Isomorphism-invariant adjacency certificate (row bitmasks under a
/// canonical labelling). Graphs up to 32 vertices.
struct CanonicalForm {
  std::vector<Vertex> labelling;  // old vertex -> canonical position
  std::vector<std::uint32_t> certificate;
};

/// Colour refinement plus individualisation, keeping the lexicographically
/// smallest certificate. Twin vertices are explored once.
CanonicalForm canonical_form(const Graph& g);

/// g relabelled by its canonical form.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected graphs on n
/// vertices, ordered by certificate. Practical up to n = 9.
std::vector<Graph> enumerate_connected(std::size_t n);

/// Trees on n vertices (n >= 1).
std::vector<Graph> enumerate_trees(std::size_t n);

/// Connected graphs on n vertices with exactly n - 1 + extra_edges edges,
/// built from trees one edge at a time.
std::vector<Graph> enumerate_cyclomatic(std::size_t n, std::size_t extra_edges);

}  // namespace lineopt
