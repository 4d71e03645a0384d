#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lineopt/graph.hpp"
#include "lineopt/line_graph.hpp"
#include "lineopt/spectra.hpp"

namespace lineopt {

// A connected graph G other than a cycle is lambda-optimal when its line
// graph has m(lambda) = 2c(G) + p(G) - 1, the largest value possible.

enum class CaseTag { PathCase, TreeCase, AttachedCycles, TwoCyclesEdge, ManyCycles, NotOptimal };

/// First violated condition, in checking order.
enum class NotOptimalReason { LambdaForm, Shape, CycleOrders, TreeCongruence, TooFewPendants };

const char* to_string(CaseTag tag);
const char* to_string(NotOptimalReason reason);

struct PathParams {
  unsigned i;  // lambda = 2cos(i pi / (m + 1))
  unsigned m;
};

struct TreeParams {
  unsigned k;  // lambda = 2cos(2k pi / (2q + 1))
  unsigned q;
  std::size_t pendant_count;
};

struct AttachedCyclesParams {
  std::vector<Vertex> tree_vertices;  // ids in G
  std::vector<std::size_t> cycle_orders;
  std::vector<Vertex> attachment_pendants;  // ids in G
  std::size_t c;
  /// How the remainder tree is optimal (path or tree case).
  CaseTag tree_case;
};

struct TwoCyclesParams {
  std::size_t n1;
  std::size_t n2;
};

struct ManyCyclesParams {
  std::vector<Vertex> tree_vertices;
  std::vector<std::size_t> cycle_orders;
  std::vector<Vertex> attachment_pendants;
  std::size_t c;
  unsigned q;
  unsigned k;
};

struct NotOptimalParams {
  NotOptimalReason reason;
  std::string detail;
};

struct OptimalityCertificate {
  CaseTag tag;
  AlgebraicEigenvalue lambda;
  std::variant<PathParams, TreeParams, AttachedCyclesParams, TwoCyclesParams, ManyCyclesParams, NotOptimalParams>
      parameters;

  bool optimal() const { return tag != CaseTag::NotOptimal; }
};

nlohmann::json to_json(const OptimalityCertificate& cert);

/// Every canonical lambda whose minimal polynomial degree is at most |E(g)|,
/// i.e. the only values that can be eigenvalues of L(g). Sorted by (b, a).
std::vector<AlgebraicEigenvalue> lambda_candidates(const Graph& g);

/// Throws Error{NotAPath}.
OptimalityCertificate path_certificate(const Graph& t, const AlgebraicEigenvalue& lambda);

/// Throws Error{NotATree}.
OptimalityCertificate tree_certificate(const Graph& t, const AlgebraicEigenvalue& lambda);

/// Block-distance form of the tree conditions: for every external block B and
/// every external vertex v of L(T), d(v, B) + 1 = q (mod 2q + 1); any two major
/// blocks are at distance 2q (mod 2q + 1). False unless lambda = (2k, 2q+1).
bool tree_block_conditions(const Graph& lt, const BlockStructure& blocks, const AlgebraicEigenvalue& lambda);

struct CycleAttachment {
  std::vector<Vertex> cycle;  // ids in G, starting at the degree-3 vertex
  std::size_t order;
  Edge joining_edge;          // ids in G
  Vertex tree_pendant;        // id in the remainder tree
};

struct PendantCycleDecomposition {
  Graph tree;
  std::vector<Vertex> tree_to_graph;
  std::vector<CycleAttachment> attachments;
};

enum class DecompositionFailureReason {
  CyclesShareVertices,
  MultipleMajorVertices,
  AttachmentDegreeNotThree,
  TwoCyclesShape,
  SharedAttachment,
  AttachmentNotTreePendant,
};

const char* to_string(DecompositionFailureReason reason);

struct DecompositionFailure {
  DecompositionFailureReason reason;
  std::vector<std::size_t> cycle_orders;  // filled for TwoCyclesShape
};

using DecompositionResult = std::variant<PendantCycleDecomposition, DecompositionFailure>;

/// Splits g into a tree plus pendant cycles hanging from its pendant vertices.
/// Throws Error{Disconnected | IsACycle | InvalidParameter (tree input)}.
DecompositionResult pendant_cycle_decompose(const Graph& g);

/// Recognizer self-tests: each mutation perturbs one congruence constant.
enum class Mutation {
  None,
  PathModulus,     // d = m - 1 instead of m (mod m + 1)
  TreeCongruence,  // d = 2q - 1 instead of 2q (mod 2q + 1)
  CycleModulus,    // cycle orders checked modulo (m + 1) instead of 2(m + 1)
};

const char* to_string(Mutation mutation);

/// Structural decision procedure. The graph is analysed once; certify() is
/// then cheap per lambda.
class Recognizer {
 public:
  /// Throws Error{Disconnected | IsACycle | EmptyGraph}.
  explicit Recognizer(const Graph& g, Mutation mutation = Mutation::None);

  OptimalityCertificate certify(const AlgebraicEigenvalue& lambda) const;

  std::size_t cyclomatic_number() const { return c_; }
  std::size_t pendant_count() const { return p_; }
  /// 2c + p - 1.
  std::size_t bound() const { return 2 * c_ + p_ - 1; }

 private:
  struct TreeView {
    std::vector<Vertex> vertices;  // ids in G
    std::size_t pendants = 0;
    std::size_t path_length = 0;   // pendant distance when pendants == 2
    std::size_t gcd_plus_one = 0;  // gcd over pendant pairs of d + 1
    std::size_t gcd_plus_two = 0;  // gcd over pendant pairs of d + 2
  };

  OptimalityCertificate tree_verdict(const AlgebraicEigenvalue& lambda) const;
  bool tree_congruent(const AlgebraicEigenvalue& lambda, std::string& detail) const;
  unsigned cycle_modulus(const AlgebraicEigenvalue& lambda) const;

  Mutation mutation_;
  std::size_t c_ = 0;
  std::size_t p_ = 0;
  std::optional<DecompositionFailure> failure_;
  TreeView tree_;
  std::vector<std::size_t> cycle_orders_;
  std::vector<Vertex> attachment_pendants_;
  std::size_t cycle_gcd_ = 0;
};

/// Throws Error{IsACycle | Disconnected | EmptyGraph}.
OptimalityCertificate optimal_certificate(const Graph& g, const AlgebraicEigenvalue& lambda);

struct EdgeReductionProbe {
  EdgeId edge;
  bool optimal;               // L(G) attains the bound
  bool mult_drop_ok;          // m_{L(G)} = m_{L(G-e)} + 1
  bool sub_optimal_ok;        // G - e is not a cycle and L(G - e) attains its bound
  bool pendant_increment_ok;  // p(G - e) = p(G) + 1
};

/// Edges on a cycle with an endpoint of degree >= 3, in (u, v) order.
std::vector<EdgeId> reduction_edges(const Graph& g);

/// Uses the smallest qualifying edge. Multiplicities come from the exact
/// engine only. Throws Error{NoQualifyingEdge}.
EdgeReductionProbe edge_reduction_probe(const Graph& g, const AlgebraicEigenvalue& lambda);
EdgeReductionProbe edge_reduction_probe(const Graph& g, const AlgebraicEigenvalue& lambda, EdgeId e);

/// m_{L(g)}(lambda) == 2c + p - 1 by the exact engine; false for cycles.
bool attains_bound(const Graph& g, const AlgebraicEigenvalue& lambda);

}  // namespace lineopt
