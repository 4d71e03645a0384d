#include "lineopt/line_graph.hpp"

#include <algorithm>
#include <limits>

namespace lineopt {

LineGraphMap line_graph(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyGraph, "line graph of an edgeless graph");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.emplace_back(inc[i], inc[j]);
  }
  LineGraphMap m;
  m.base = g;
  m.line = Graph::build(g.size(), edges);
  m.edge_to_vertex.resize(g.size());
  m.vertex_to_edge.resize(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    m.edge_to_vertex[e] = e;
    m.vertex_to_edge[e] = e;
  }
  return m;
}

namespace {

// Hopcroft-Tarjan biconnected components with an explicit edge stack.
std::vector<Block> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Block> blocks;
  std::vector<std::size_t> disc(n, kUnreachable), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::size_t timer = 0;
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
  };

  auto pop_block = [&](EdgeId until) {
    Block b;
    while (true) {
      EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      b.push_back(g.edge(e).u);
      b.push_back(g.edge(e).v);
      if (e == until) break;
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    blocks.push_back(std::move(b));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnreachable) continue;
    if (g.degree(root) == 0) {
      blocks.push_back({root});
      disc[root] = timer++;
      continue;
    }
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident_edges(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.parent_edge) continue;
        const Edge& ed = g.edge(e);
        Vertex w = ed.u == f.v ? ed.v : ed.u;
        if (disc[w] == kUnreachable) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) pop_block(done.parent_edge);
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front() || (a.front() == b.front() && a < b); });
  return blocks;
}

std::size_t min_distance(const std::vector<std::size_t>& dist, const Block& b) {
  std::size_t best = kUnreachable;
  for (Vertex u : b) best = std::min(best, dist[u]);
  return best;
}

}  // namespace

BlockStructure block_structure(const Graph& lt) {
  if (!is_connected(lt)) throw Error(ErrorCode::Disconnected, "block_structure");
  BlockStructure s;
  s.blocks = biconnected_blocks(lt);

  std::vector<std::size_t> membership(lt.order(), 0);
  for (const auto& b : s.blocks)
    for (Vertex v : b) ++membership[v];
  for (Vertex v = 0; v < lt.order(); ++v) {
    if (membership[v] >= 2) {
      s.internal_vertices.push_back(v);
    } else {
      s.external_vertices.push_back(v);
    }
  }
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    if (s.blocks[i].size() >= 3) s.major_blocks.push_back(i);

  s.external_vertices_of_block.assign(s.blocks.size(), {});
  for (Vertex v : s.external_vertices) {
    const auto dist = bfs_distances(lt, v);
    std::size_t best = kUnreachable;
    std::vector<std::size_t> nearest;
    for (std::size_t bi : s.major_blocks) {
      const auto d = min_distance(dist, s.blocks[bi]);
      if (d < best) {
        best = d;
        nearest.clear();
      }
      if (d == best) nearest.push_back(bi);
    }
    for (std::size_t bi : nearest) s.external_vertices_of_block[bi].push_back(v);
    s.major_blocks_of.push_back(std::move(nearest));
  }

  if (s.major_blocks.size() == 1) {
    s.external_blocks = s.major_blocks;
  } else {
    for (std::size_t bi : s.major_blocks) {
      if (s.external_vertices_of_block[bi].size() + 1 >= s.blocks[bi].size()) s.external_blocks.push_back(bi);
    }
  }
  return s;
}

std::size_t vertex_block_distance(const Graph& lt, Vertex v, const Block& b) {
  const auto d = min_distance(bfs_distances(lt, v), b);
  if (d == kUnreachable) throw Error(ErrorCode::Unreachable, "vertex_block_distance");
  return d;
}

std::size_t block_block_distance(const Graph& lt, const Block& b1, const Block& b2) {
  if (b1 == b2) throw Error(ErrorCode::NoSecondBlock, "block distance needs two distinct blocks");
  std::size_t best = kUnreachable;
  for (Vertex u : b1) best = std::min(best, min_distance(bfs_distances(lt, u), b2));
  if (best == kUnreachable) throw Error(ErrorCode::Unreachable, "block_block_distance");
  return best;
}

}  // namespace lineopt
