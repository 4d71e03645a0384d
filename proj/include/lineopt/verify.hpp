#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lineopt/characterize.hpp"
#include "lineopt/graph.hpp"
#include "lineopt/poly.hpp"
#include "lineopt/spectra.hpp"

namespace lineopt {

struct BoundViolation {
  std::string graph6;
  IntPoly factor;
  unsigned multiplicity;
  std::size_t bound;
};

struct EquivalenceFailure {
  std::string graph6;
  AlgebraicEigenvalue lambda;
  std::string verdict;  // recognizer case tag
  unsigned multiplicity;
  std::size_t bound;
};

/// An eigenvalue class of L(G) reaching the bound whose roots are not all of
/// the form 2cos(a pi / b) with small enough degree.
struct LambdaFormFailure {
  std::string graph6;
  IntPoly factor;
  IntPoly leftover;
};

struct OracleDisagreement {
  std::string graph6;
  AlgebraicEigenvalue lambda;
  unsigned polynomial;
  std::size_t nullity;
  std::size_t numeric;
  bool ambiguous;
};

struct LemmaFailure {
  std::string graph6;
  std::string detail;
};

struct LemmaTally {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // hypothesis false
  std::vector<LemmaFailure> failures;
};

struct VerificationReport {
  std::size_t graphs_checked = 0;
  std::size_t cycles_skipped = 0;
  std::size_t candidates_checked = 0;
  std::size_t optimal_pairs = 0;  // (graph, lambda) pairs attaining the bound
  std::vector<BoundViolation> bound_violations;
  std::vector<EquivalenceFailure> equivalence_failures;
  std::vector<LambdaFormFailure> lambda_form_failures;
  std::vector<OracleDisagreement> oracle_disagreements;
  /// Line graphs whose distinct numeric eigenvalues come closer than the guard.
  std::vector<std::string> guard_violations;
  std::map<std::string, LemmaTally> lemmas;
  double elapsed_seconds = 0;

  bool passed() const;
  /// Adds counts and appends failure lists; used for ordered merges.
  void absorb(VerificationReport other);
};

nlohmann::json to_json(const VerificationReport& report);
/// Plain-text summary table.
std::string summary_table(const VerificationReport& report);

struct VerifyOptions {
  Mutation mutation = Mutation::None;
  /// Also compare polynomial, nullity and numeric multiplicities.
  bool oracles = false;
  /// 0 picks LINEOPT_WORKERS or the hardware concurrency.
  std::size_t workers = 0;
};

std::size_t default_workers();

/// Runs fn(i) for i in [0, count) on a pool; results come back in index order.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn);

/// Bound, equivalence and lambda-form checks on each non-cycle connected graph.
VerificationReport verify_graphs(const std::vector<Graph>& graphs, const VerifyOptions& options = {});

/// verify_graphs over every connected graph on 2..max_n vertices.
VerificationReport verify_main_theorem(std::size_t max_n, const VerifyOptions& options = {});

struct LemmaOptions {
  std::size_t max_n = 7;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t max_path = 200;
  std::size_t max_cycle = 120;
  unsigned cycle_max_b = 12;
  std::size_t workers = 0;
};

/// Path and cycle eigenvalue laws, path deletion, deletion closure, the bridge
/// identity, path absorption, edge reduction, non-adjacent major vertices and
/// annihilator bounds, over enumerated graphs plus seeded composites.
VerificationReport verify_lemmas(const LemmaOptions& options);

/// Polynomial multiplicity, nullity over Q(lambda) and numeric count agree for
/// every candidate lambda of g.
std::vector<OracleDisagreement> cross_check_details(const Graph& g);
bool cross_check(const Graph& g);

}  // namespace lineopt
