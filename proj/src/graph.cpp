#include "lineopt/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace lineopt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NotAPendantPath: return "NotAPendantPath";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NoSecondBlock: return "NoSecondBlock";
    case ErrorCode::NonCanonical: return "NonCanonical";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::IsACycle: return "IsACycle";
    case ErrorCode::NoQualifyingEdge: return "NoQualifyingEdge";
    case ErrorCode::NotPendant: return "NotPendant";
    case ErrorCode::DuplicateAttachment: return "DuplicateAttachment";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Graph Graph::build(std::size_t vertex_count,
                   std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return build(vertex_count,
               std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

Graph Graph::build(std::size_t vertex_count,
                   std::span<const std::pair<Vertex, Vertex>> edge_list) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  g.incidence_.resize(vertex_count);
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorCode::InvalidVertex, "endpoint out of range in edge (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw Error(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(a));
    auto& row = g.adjacency_[a];
    auto it = std::lower_bound(row.begin(), row.end(), b);
    if (it != row.end() && *it == b) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") repeated");
    }
    row.insert(it, b);
    auto& other = g.adjacency_[b];
    other.insert(std::lower_bound(other.begin(), other.end(), a), a);
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    g.incidence_[a].push_back(id);
    g.incidence_[b].push_back(id);
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return std::nullopt;
  for (EdgeId e : incidence_[u]) {
    const Edge& ed = edges_[e];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
  }
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw Error(ErrorCode::InvalidVertex, "distance");
  const auto d = bfs_distances(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::size_t pendant_count(const Graph& g) {
  std::size_t p = 0;
  for (Vertex v = 0; v < g.order(); ++v) p += g.degree(v) == 1;
  return p;
}

namespace {

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

// Iterative Tarjan low-link over every component.
void lowlink(const Graph& g, std::vector<EdgeId>& bridges, std::vector<Vertex>& cuts) {
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, kUnreachable), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t timer = 0;
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
    std::size_t children;
  };
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnreachable) continue;
    std::vector<Frame> stack{{root, kNone, 0, 0}};
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
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, e, 0, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[done.v] = true;
        break;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] > disc[parent.v]) bridges.push_back(done.parent_edge);
      if (parent.parent_edge != kNone && low[done.v] >= disc[parent.v]) is_cut[parent.v] = true;
    }
  }
  std::sort(bridges.begin(), bridges.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) cuts.push_back(v);
}

}  // namespace

std::size_t cyclomatic_number(const Graph& g) {
  return g.size() + component_count(g) - g.order();
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

StructureSummary summarize(const Graph& g) {
  StructureSummary s;
  s.connected = is_connected(g);
  s.cyclomatic_number = cyclomatic_number(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) s.pendant_vertices.push_back(v);
    if (g.degree(v) >= 3) s.major_vertices.push_back(v);
  }
  s.pendant_count = s.pendant_vertices.size();
  s.is_tree = s.connected && s.cyclomatic_number == 0;
  s.is_cycle = is_cycle(g);
  lowlink(g, s.bridges, s.cut_vertices);
  return s;
}

Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Relabeled r;
  r.old_to_new.assign(g.order(), std::nullopt);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v >= g.order()) throw Error(ErrorCode::InvalidVertex, "induced_subgraph");
    r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) {
    if (r.old_to_new[e.u] && r.old_to_new[e.v]) edges.emplace_back(*r.old_to_new[e.u], *r.old_to_new[e.v]);
  }
  r.graph = Graph::build(r.new_to_old.size(), edges);
  return r;
}

Relabeled remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> drop(g.order(), false);
  for (Vertex v : removed) drop.at(v) = true;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph remove_edge(const Graph& g, EdgeId e) {
  auto pairs = g.edge_pairs();
  pairs.erase(pairs.begin() + e);
  return Graph::build(g.order(), pairs);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  auto pairs = g.edge_pairs();
  pairs.emplace_back(u, v);
  return Graph::build(std::max<std::size_t>(g.order(), std::max(u, v) + 1), pairs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto pairs = a.edge_pairs();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edge_pairs()) pairs.emplace_back(u + shift, v + shift);
  return Graph::build(a.order() + b.order(), pairs);
}

std::vector<PendantPath> pendant_paths(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "pendant_paths");
  std::vector<PendantPath> out;
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    PendantPath p;
    p.vertices.push_back(leaf);
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      p.vertices.push_back(cur);
      const auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) >= 3) {
      p.attachment = cur;
      out.push_back(std::move(p));
    }
  }
  return out;
}

Relabeled delete_pendant_path(const Graph& g, std::span<const Vertex> path) {
  auto reject = [](const std::string& why) { throw Error(ErrorCode::NotAPendantPath, why); };
  if (path.empty()) reject("empty path");
  for (Vertex v : path)
    if (v >= g.order()) reject("vertex out of range");
  if (g.degree(path.front()) != 1) reject("free end is not a pendant vertex");
  std::vector<bool> on_path(g.order(), false);
  for (Vertex v : path) {
    if (on_path[v]) reject("repeated vertex");
    on_path[v] = true;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.adjacent(path[i], path[i + 1])) reject("consecutive vertices are not adjacent");
    if (i > 0 && g.degree(path[i]) != 2) reject("interior vertex has degree != 2");
  }
  const Vertex last = path.back();
  std::optional<Vertex> attachment;
  for (Vertex w : g.neighbors(last)) {
    if (on_path[w]) continue;
    if (attachment) reject("path leaves through more than one edge");
    attachment = w;
  }
  if (!attachment) reject("path does not attach to the rest of the graph");
  if (path.size() > 1 && g.degree(last) != 2) reject("last vertex has degree != 2");
  if (g.degree(*attachment) - 1 < 2) reject("attachment vertex would keep degree < 2");
  return remove_vertices(g, path);
}

std::vector<PendantCycle> pendant_cycles(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "pendant_cycles");
  std::vector<PendantCycle> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 3) continue;
    for (Vertex start : g.neighbors(u)) {
      std::vector<Vertex> walk{u};
      Vertex prev = u;
      Vertex cur = start;
      while (cur != u && g.degree(cur) == 2) {
        walk.push_back(cur);
        const auto nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      // Report each cycle once, from its smaller end neighbor.
      if (cur == u && walk.size() >= 3 && walk[1] < walk.back()) {
        out.push_back(PendantCycle{std::move(walk), u});
      }
    }
  }
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::build(leaves + 1, e);
}

Graph spider_graph(std::span<const std::size_t> leg_lengths) {
  std::vector<std::pair<Vertex, Vertex>> e;
  Vertex next = 1;
  for (std::size_t len : leg_lengths) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::build(next, e);
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::build(10, e);
}

}  // namespace lineopt
