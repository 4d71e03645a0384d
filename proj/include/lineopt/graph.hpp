#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lineopt {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

enum class ErrorCode {
  InvalidVertex,
  InvalidEdge,
  DuplicateEdge,
  Disconnected,
  Unreachable,
  NotAPendantPath,
  EmptyGraph,
  NoSecondBlock,
  NonCanonical,
  NotAPath,
  NotATree,
  IsACycle,
  NoQualifyingEdge,
  NotPendant,
  DuplicateAttachment,
  InvalidParameter,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph. Immutable once built; edge ids are positions in
/// edges() and neighbor lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  /// Throws Error{InvalidVertex | InvalidEdge | DuplicateEdge}.
  static Graph build(std::size_t vertex_count,
                     std::span<const std::pair<Vertex, Vertex>> edge_list);
  static Graph build(std::size_t vertex_count,
                     std::initializer_list<std::pair<Vertex, Vertex>> edge_list);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::span<const EdgeId> incident_edges(Vertex v) const { return incidence_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
};

inline Graph build_graph(std::size_t vertex_count,
                         std::span<const std::pair<Vertex, Vertex>> edge_list) {
  return Graph::build(vertex_count, edge_list);
}

struct StructureSummary {
  bool connected = false;
  std::size_t cyclomatic_number = 0;
  std::size_t pendant_count = 0;
  std::vector<Vertex> pendant_vertices;
  std::vector<Vertex> major_vertices;
  bool is_cycle = false;
  bool is_tree = false;
  std::vector<EdgeId> bridges;
  std::vector<Vertex> cut_vertices;
};

StructureSummary summarize(const Graph& g);

bool is_connected(const Graph& g);
std::size_t pendant_count(const Graph& g);
std::size_t cyclomatic_number(const Graph& g);
bool is_cycle(const Graph& g);

/// Breadth-first distance; nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// Distances from one source; unreachable entries hold kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g);

/// Result of deleting vertices or edges: the new graph plus where each old
/// vertex went (nullopt when deleted).
struct Relabeled {
  Graph graph;
  std::vector<std::optional<Vertex>> old_to_new;
  std::vector<Vertex> new_to_old;
};

Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Relabeled remove_vertices(const Graph& g, std::span<const Vertex> removed);
Graph remove_edge(const Graph& g, EdgeId e);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph disjoint_union(const Graph& a, const Graph& b);

struct PendantPath {
  std::vector<Vertex> vertices;  // free end first
  Vertex attachment;
  friend bool operator==(const PendantPath&, const PendantPath&) = default;
};

/// Maximal hanging paths whose attachment vertex keeps degree >= 2 once the
/// path is gone. Ordered by free-end vertex id. Throws Disconnected.
std::vector<PendantPath> pendant_paths(const Graph& g);

/// Throws NotAPendantPath unless `path` hangs from g as a pendant path.
Relabeled delete_pendant_path(const Graph& g, std::span<const Vertex> path);

struct PendantCycle {
  std::vector<Vertex> vertices;  // starts at the major vertex
  Vertex major_vertex;
  friend bool operator==(const PendantCycle&, const PendantCycle&) = default;
};

/// Cycles containing exactly one major vertex, of degree exactly 3.
std::vector<PendantCycle> pendant_cycles(const Graph& g);

// Small named graphs used throughout tests and generators.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph spider_graph(std::span<const std::size_t> leg_lengths);
Graph petersen_graph();

}  // namespace lineopt
