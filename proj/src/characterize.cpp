#include "lineopt/characterize.hpp"

#include <algorithm>
#include <numeric>

namespace lineopt {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::PathCase: return "PathCase";
    case CaseTag::TreeCase: return "TreeCase";
    case CaseTag::AttachedCycles: return "AttachedCycles";
    case CaseTag::TwoCyclesEdge: return "TwoCyclesEdge";
    case CaseTag::ManyCycles: return "ManyCycles";
    case CaseTag::NotOptimal: return "NotOptimal";
  }
  return "?";
}

const char* to_string(NotOptimalReason reason) {
  switch (reason) {
    case NotOptimalReason::LambdaForm: return "LambdaForm";
    case NotOptimalReason::Shape: return "Shape";
    case NotOptimalReason::CycleOrders: return "CycleOrders";
    case NotOptimalReason::TreeCongruence: return "TreeCongruence";
    case NotOptimalReason::TooFewPendants: return "TooFewPendants";
  }
  return "?";
}

const char* to_string(DecompositionFailureReason reason) {
  switch (reason) {
    case DecompositionFailureReason::CyclesShareVertices: return "CyclesShareVertices";
    case DecompositionFailureReason::MultipleMajorVertices: return "MultipleMajorVertices";
    case DecompositionFailureReason::AttachmentDegreeNotThree: return "AttachmentDegreeNotThree";
    case DecompositionFailureReason::TwoCyclesShape: return "TwoCyclesShape";
    case DecompositionFailureReason::SharedAttachment: return "SharedAttachment";
    case DecompositionFailureReason::AttachmentNotTreePendant: return "AttachmentNotTreePendant";
  }
  return "?";
}

const char* to_string(Mutation mutation) {
  switch (mutation) {
    case Mutation::None: return "none";
    case Mutation::PathModulus: return "path-modulus";
    case Mutation::TreeCongruence: return "tree-congruence";
    case Mutation::CycleModulus: return "cycle-modulus";
  }
  return "?";
}

nlohmann::json to_json(const OptimalityCertificate& cert) {
  using nlohmann::json;
  json params = json::object();
  std::string reason;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PathParams>) {
          params = {{"i", p.i}, {"m", p.m}};
        } else if constexpr (std::is_same_v<T, TreeParams>) {
          params = {{"k", p.k}, {"q", p.q}, {"pendant_count", p.pendant_count}};
        } else if constexpr (std::is_same_v<T, AttachedCyclesParams>) {
          params = {{"tree_vertices", p.tree_vertices},
                    {"cycle_orders", p.cycle_orders},
                    {"attachment_pendants", p.attachment_pendants},
                    {"c", p.c},
                    {"tree_case", to_string(p.tree_case)}};
        } else if constexpr (std::is_same_v<T, TwoCyclesParams>) {
          params = {{"n1", p.n1}, {"n2", p.n2}};
        } else if constexpr (std::is_same_v<T, ManyCyclesParams>) {
          params = {{"tree_vertices", p.tree_vertices},
                    {"cycle_orders", p.cycle_orders},
                    {"attachment_pendants", p.attachment_pendants},
                    {"c", p.c},
                    {"q", p.q},
                    {"k", p.k}};
        } else {
          reason = to_string(p.reason);
          params = {{"detail", p.detail}};
        }
      },
      cert.parameters);
  json out = {{"case_tag", to_string(cert.tag)},
              {"lambda", {{"a", cert.lambda.a()}, {"b", cert.lambda.b()}}},
              {"parameters", params}};
  if (!reason.empty()) out["reason"] = reason;
  return out;
}

std::vector<AlgebraicEigenvalue> lambda_candidates(const Graph& g) { return trig_candidates(g.size()); }

namespace {

OptimalityCertificate not_optimal(const AlgebraicEigenvalue& lambda, NotOptimalReason reason, std::string detail) {
  return {CaseTag::NotOptimal, lambda, NotOptimalParams{reason, std::move(detail)}};
}

std::vector<Vertex> pendants_of(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

}  // namespace

DecompositionResult pendant_cycle_decompose(const Graph& g) {
  const auto summary = summarize(g);
  if (!summary.connected) throw Error(ErrorCode::Disconnected, "pendant_cycle_decompose needs a connected graph");
  if (summary.is_cycle) throw Error(ErrorCode::IsACycle, "pendant_cycle_decompose on a cycle");
  if (summary.cyclomatic_number == 0) throw Error(ErrorCode::InvalidParameter, "graph has no cycle");

  const auto bs = block_structure(g);
  std::vector<const Block*> cycles;
  std::vector<int> cycle_of(g.order(), -1);
  for (const auto& block : bs.blocks) {
    if (block.size() < 3) continue;
    std::size_t inside = 0;
    for (Vertex v : block)
      for (Vertex w : g.neighbors(v))
        if (std::binary_search(block.begin(), block.end(), w)) ++inside;
    if (inside / 2 != block.size()) return DecompositionFailure{DecompositionFailureReason::CyclesShareVertices, {}};
    for (Vertex v : block) {
      if (cycle_of[v] != -1) return DecompositionFailure{DecompositionFailureReason::CyclesShareVertices, {}};
      cycle_of[v] = static_cast<int>(cycles.size());
    }
    cycles.push_back(&block);
  }

  std::vector<Vertex> majors(cycles.size());
  std::vector<Vertex> targets(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::vector<Vertex> found;
    for (Vertex v : *cycles[i])
      if (g.degree(v) >= 3) found.push_back(v);
    if (found.size() != 1) return DecompositionFailure{DecompositionFailureReason::MultipleMajorVertices, {}};
    majors[i] = found[0];
    if (g.degree(majors[i]) != 3) return DecompositionFailure{DecompositionFailureReason::AttachmentDegreeNotThree, {}};
    for (Vertex w : g.neighbors(majors[i]))
      if (cycle_of[w] != static_cast<int>(i)) targets[i] = w;
  }

  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycle_of[targets[i]] != -1) {
      // Both degree-3 vertices spend their only outside edge on each other.
      std::vector<std::size_t> orders;
      for (const auto* c : cycles) orders.push_back(c->size());
      return DecompositionFailure{DecompositionFailureReason::TwoCyclesShape, orders};
    }
  }
  {
    auto sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return DecompositionFailure{DecompositionFailureReason::SharedAttachment, {}};
  }

  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.order(); ++v)
    if (cycle_of[v] != -1) removed.push_back(v);
  auto rest = remove_vertices(g, removed);

  PendantCycleDecomposition out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Vertex y = *rest.old_to_new[targets[i]];
    if (rest.graph.degree(y) != 1) return DecompositionFailure{DecompositionFailureReason::AttachmentNotTreePendant, {}};
    CycleAttachment att;
    att.order = cycles[i]->size();
    const auto in_cycle = [&](Vertex w) { return cycle_of[w] == static_cast<int>(i); };
    att.cycle.push_back(majors[i]);
    Vertex prev = majors[i];
    Vertex cur = *std::find_if(g.neighbors(prev).begin(), g.neighbors(prev).end(), in_cycle);
    while (cur != majors[i]) {
      att.cycle.push_back(cur);
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    att.joining_edge = Edge{std::min(majors[i], targets[i]), std::max(majors[i], targets[i])};
    att.tree_pendant = y;
    out.attachments.push_back(std::move(att));
  }
  out.tree = std::move(rest.graph);
  out.tree_to_graph = std::move(rest.new_to_old);
  return out;
}

Recognizer::Recognizer(const Graph& g, Mutation mutation) : mutation_(mutation) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  const auto summary = summarize(g);
  if (!summary.connected) throw Error(ErrorCode::Disconnected, "graph is not connected");
  if (summary.is_cycle) throw Error(ErrorCode::IsACycle, "graph is a cycle");
  c_ = summary.cyclomatic_number;
  p_ = summary.pendant_count;

  const Graph* tree = &g;
  PendantCycleDecomposition decomposition;
  if (c_ > 0) {
    auto result = pendant_cycle_decompose(g);
    if (auto* f = std::get_if<DecompositionFailure>(&result)) {
      failure_ = *f;
      cycle_orders_ = f->cycle_orders;
      for (auto o : cycle_orders_) cycle_gcd_ = std::gcd(cycle_gcd_, o);
      return;
    }
    decomposition = std::move(std::get<PendantCycleDecomposition>(result));
    for (const auto& att : decomposition.attachments) {
      cycle_orders_.push_back(att.order);
      cycle_gcd_ = std::gcd(cycle_gcd_, att.order);
      attachment_pendants_.push_back(decomposition.tree_to_graph[att.tree_pendant]);
    }
    tree = &decomposition.tree;
    tree_.vertices = decomposition.tree_to_graph;
  } else {
    tree_.vertices.resize(g.order());
    std::iota(tree_.vertices.begin(), tree_.vertices.end(), Vertex{0});
  }

  const auto leaves = pendants_of(*tree);
  tree_.pendants = leaves.size();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto dist = bfs_distances(*tree, leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const std::size_t d = dist[leaves[j]];
      tree_.path_length = d;
      tree_.gcd_plus_one = std::gcd(tree_.gcd_plus_one, d + 1);
      tree_.gcd_plus_two = std::gcd(tree_.gcd_plus_two, d + 2);
    }
  }
}

unsigned Recognizer::cycle_modulus(const AlgebraicEigenvalue& lambda) const {
  if (lambda.is_even_form() || mutation_ == Mutation::CycleModulus) return lambda.b();
  return 2 * lambda.b();
}

bool Recognizer::tree_congruent(const AlgebraicEigenvalue& lambda, std::string& detail) const {
  const unsigned b = lambda.b();
  if (tree_.pendants == 2) {
    const std::size_t shifted = tree_.path_length + (mutation_ == Mutation::PathModulus ? 2 : 1);
    if (shifted % b == 0) return true;
    detail = "pendant distance " + std::to_string(tree_.path_length) + " is not " + std::to_string(b - 1) + " mod " +
             std::to_string(b);
    return false;
  }
  if (tree_.pendants < 2) {
    detail = "tree has fewer than two pendant vertices";
    return false;
  }
  if (!lambda.is_even_form()) {
    detail = "a tree with three or more pendant vertices needs lambda = 2cos(2k pi/(2q+1))";
    return false;
  }
  const std::size_t g = mutation_ == Mutation::TreeCongruence ? tree_.gcd_plus_two : tree_.gcd_plus_one;
  if (g % b == 0) return true;
  detail = "some pendant pair distance is not " + std::to_string(b - 1) + " mod " + std::to_string(b);
  return false;
}

OptimalityCertificate Recognizer::tree_verdict(const AlgebraicEigenvalue& lambda) const {
  std::string detail;
  if (!tree_congruent(lambda, detail)) {
    const bool form = tree_.pendants >= 3 && !lambda.is_even_form();
    return not_optimal(lambda, form ? NotOptimalReason::LambdaForm : NotOptimalReason::TreeCongruence, detail);
  }
  if (tree_.pendants == 2) return {CaseTag::PathCase, lambda, PathParams{lambda.a(), lambda.b() - 1}};
  return {CaseTag::TreeCase, lambda, TreeParams{lambda.a() / 2, (lambda.b() - 1) / 2, tree_.pendants}};
}

OptimalityCertificate Recognizer::certify(const AlgebraicEigenvalue& lambda) const {
  if (c_ == 0) return tree_verdict(lambda);
  if (c_ >= 3 && !lambda.is_even_form())
    return not_optimal(lambda, NotOptimalReason::LambdaForm, "three or more cycles need lambda = 2cos(2k pi/(2q+1))");

  const unsigned modulus = cycle_modulus(lambda);
  if (failure_) {
    if (failure_->reason != DecompositionFailureReason::TwoCyclesShape)
      return not_optimal(lambda, NotOptimalReason::Shape, to_string(failure_->reason));
    if (cycle_gcd_ % modulus != 0)
      return not_optimal(lambda, NotOptimalReason::CycleOrders,
                         "cycle orders are not multiples of " + std::to_string(modulus));
    return {CaseTag::TwoCyclesEdge, lambda, TwoCyclesParams{cycle_orders_[0], cycle_orders_[1]}};
  }
  if (cycle_gcd_ % modulus != 0)
    return not_optimal(lambda, NotOptimalReason::CycleOrders, "cycle orders are not multiples of " + std::to_string(modulus));
  std::string detail;
  if (!tree_congruent(lambda, detail)) return not_optimal(lambda, NotOptimalReason::TreeCongruence, detail);
  if (tree_.pendants < c_) return not_optimal(lambda, NotOptimalReason::TooFewPendants, "p(T) < c(G)");

  if (c_ <= 2) {
    return {CaseTag::AttachedCycles, lambda,
            AttachedCyclesParams{tree_.vertices, cycle_orders_, attachment_pendants_, c_,
                                 tree_.pendants == 2 ? CaseTag::PathCase : CaseTag::TreeCase}};
  }
  return {CaseTag::ManyCycles, lambda,
          ManyCyclesParams{tree_.vertices, cycle_orders_, attachment_pendants_, c_, (lambda.b() - 1) / 2,
                           lambda.a() / 2}};
}

OptimalityCertificate optimal_certificate(const Graph& g, const AlgebraicEigenvalue& lambda) {
  return Recognizer(g).certify(lambda);
}

OptimalityCertificate path_certificate(const Graph& t, const AlgebraicEigenvalue& lambda) {
  const auto s = summarize(t);
  if (!s.is_tree || s.pendant_count != 2) throw Error(ErrorCode::NotAPath, "input is not a path");
  return Recognizer(t).certify(lambda);
}

OptimalityCertificate tree_certificate(const Graph& t, const AlgebraicEigenvalue& lambda) {
  if (!summarize(t).is_tree) throw Error(ErrorCode::NotATree, "input is not a tree");
  return Recognizer(t).certify(lambda);
}

bool tree_block_conditions(const Graph& lt, const BlockStructure& blocks, const AlgebraicEigenvalue& lambda) {
  if (!lambda.is_even_form()) return false;
  const unsigned b = lambda.b();
  const unsigned q = (b - 1) / 2;
  for (std::size_t idx : blocks.external_blocks) {
    for (Vertex v : blocks.external_vertices) {
      if ((vertex_block_distance(lt, v, blocks.blocks[idx]) + 1) % b != q) return false;
    }
  }
  const auto& major = blocks.major_blocks;
  for (std::size_t i = 0; i < major.size(); ++i)
    for (std::size_t j = i + 1; j < major.size(); ++j)
      if (block_block_distance(lt, blocks.blocks[major[i]], blocks.blocks[major[j]]) % b != b - 1) return false;
  return true;
}

bool attains_bound(const Graph& g, const AlgebraicEigenvalue& lambda) {
  if (g.size() == 0 || is_cycle(g)) return false;
  const std::size_t bound = 2 * cyclomatic_number(g) + pendant_count(g) - 1;
  return multiplicity(line_graph(g).line, lambda) == bound;
}

std::vector<EdgeId> reduction_edges(const Graph& g) {
  const auto s = summarize(g);
  std::vector<bool> bridge(g.size(), false);
  for (EdgeId e : s.bridges) bridge[e] = true;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& ed = g.edge(e);
    if (!bridge[e] && (g.degree(ed.u) >= 3 || g.degree(ed.v) >= 3)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [&](EdgeId x, EdgeId y) {
    const auto& a = g.edge(x);
    const auto& b = g.edge(y);
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return out;
}

EdgeReductionProbe edge_reduction_probe(const Graph& g, const AlgebraicEigenvalue& lambda, EdgeId e) {
  const Graph h = remove_edge(g, e);
  const unsigned mg = multiplicity(line_graph(g).line, lambda);
  const unsigned mh = multiplicity(line_graph(h).line, lambda);
  const std::size_t pg = pendant_count(g);
  const std::size_t ph = pendant_count(h);
  EdgeReductionProbe out;
  out.edge = e;
  out.optimal = !is_cycle(g) && mg == 2 * cyclomatic_number(g) + pg - 1;
  out.mult_drop_ok = mg == mh + 1;
  out.sub_optimal_ok = !is_cycle(h) && mh == 2 * cyclomatic_number(h) + ph - 1;
  out.pendant_increment_ok = ph == pg + 1;
  return out;
}

EdgeReductionProbe edge_reduction_probe(const Graph& g, const AlgebraicEigenvalue& lambda) {
  const auto edges = reduction_edges(g);
  if (edges.empty()) throw Error(ErrorCode::NoQualifyingEdge, "no cycle edge touches a major vertex");
  return edge_reduction_probe(g, lambda, edges.front());
}

}  // namespace lineopt
