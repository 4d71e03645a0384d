#include "lineopt/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace lineopt {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    if (n_ > 32) throw Error(ErrorCode::InvalidParameter, "canonical form supports at most 32 vertices");
    for (const auto& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  CanonicalForm run() {
    Cells start;
    if (n_ > 0) {
      start.emplace_back();
      for (Vertex v = 0; v < n_; ++v) start[0].push_back(v);
    }
    search(std::move(start));
    return std::move(best_);
  }

 private:
  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(n_);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = c;
      Cells next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint8_t>, Vertex>> keyed;
        for (Vertex v : cell) {
          std::vector<std::uint8_t> sig(cells.size(), 0);
          for (Mask m = adj_[v]; m; m &= m - 1) ++sig[cell_of[std::countr_zero(m)]];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = next.size();
        next.emplace_back();
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i > 0 && keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
        if (next.size() - start > 1) changed = true;
      }
      cells = std::move(next);
    }
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : cells[t]) {
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
        return (adj_[u] & ~(Mask{1} << v)) == (adj_[v] & ~(Mask{1} << u));
      });
      if (twin) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        child.emplace_back();
        for (Vertex w : cells[c])
          if (w != v) child.back().push_back(w);
      }
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> position(n_);
    for (std::size_t c = 0; c < cells.size(); ++c) position[cells[c][0]] = static_cast<Vertex>(c);
    std::vector<Mask> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Mask m = adj_[v]; m; m &= m - 1) rows[position[v]] |= Mask{1} << position[std::countr_zero(m)];
    if (best_.certificate.empty() || rows < best_.certificate) {
      best_.certificate = std::move(rows);
      best_.labelling = std::move(position);
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  CanonicalForm best_;
};

Graph relabel(const Graph& g, const std::vector<Vertex>& position) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) {
    Vertex a = position[e.u], b = position[e.v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return Graph::build(g.order(), edges);
}

// Canonical representatives of every one-step extension, ordered by certificate.
template <class Extend>
std::vector<Graph> extend_all(const std::vector<Graph>& parents, Extend&& extend) {
  std::map<std::vector<Mask>, Graph> seen;
  for (const auto& parent : parents) {
    extend(parent, [&](const Graph& child) {
      auto form = canonical_form(child);
      if (!seen.contains(form.certificate)) seen.emplace(std::move(form.certificate), relabel(child, form.labelling));
    });
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [cert, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labelling); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a).certificate == canonical_form(b).certificate;
}

std::vector<Graph> enumerate_connected(std::size_t n) {
  if (n == 0) return {};
  std::vector<Graph> level{Graph::build(1, {})};
  for (std::size_t k = 1; k < n; ++k) {
    level = extend_all(level, [k](const Graph& g, auto&& emit) {
      const auto base = g.edge_pairs();
      for (Mask subset = 1; subset < (Mask{1} << k); ++subset) {
        auto edges = base;
        for (Mask m = subset; m; m &= m - 1) edges.emplace_back(static_cast<Vertex>(std::countr_zero(m)), k);
        emit(Graph::build(k + 1, edges));
      }
    });
  }
  return level;
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<Graph> level{Graph::build(1, {})};
  for (std::size_t k = 1; k < n; ++k) {
    level = extend_all(level, [k](const Graph& g, auto&& emit) {
      const auto base = g.edge_pairs();
      for (Vertex v = 0; v < k; ++v) {
        auto edges = base;
        edges.emplace_back(v, k);
        emit(Graph::build(k + 1, edges));
      }
    });
  }
  return level;
}

std::vector<Graph> enumerate_cyclomatic(std::size_t n, std::size_t extra_edges) {
  auto level = enumerate_trees(n);
  for (std::size_t step = 0; step < extra_edges; ++step) {
    level = extend_all(level, [n](const Graph& g, auto&& emit) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) emit(add_edge(g, u, v));
    });
  }
  return level;
}

}  // namespace lineopt
