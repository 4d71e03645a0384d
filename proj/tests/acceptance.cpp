// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lineopt/characterize.hpp"
#include "lineopt/enumerate.hpp"
#include "lineopt/families.hpp"
#include "lineopt/line_graph.hpp"
#include "lineopt/verify.hpp"

using namespace lineopt;

namespace {

int failed = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string counts(const VerificationReport& r) {
  return std::to_string(r.graphs_checked) + " graphs, " + std::to_string(r.candidates_checked) + " (graph, lambda) pairs";
}

void append(std::vector<Graph>& into, std::vector<Graph> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  VerifyOptions with_oracles;
  with_oracles.oracles = true;
  const auto corpus = verify_main_theorem(8, with_oracles);

  report(1, corpus.bound_violations.empty() && corpus.graphs_checked > 12000,
         "bound 2c+p-1 on connected non-cycles n<=8: " + std::to_string(corpus.graphs_checked) + " graphs, " +
             std::to_string(corpus.bound_violations.size()) + " violations");

  std::vector<Graph> extra;
  for (std::size_t n = 2; n <= 13; ++n) append(extra, enumerate_trees(n));
  for (std::size_t n = 3; n <= 11; ++n) append(extra, enumerate_cyclomatic(n, 1));
  for (std::size_t n = 4; n <= 11; ++n) append(extra, enumerate_cyclomatic(n, 2));
  const auto families = verify_graphs(extra);
  const std::size_t mismatches = corpus.equivalence_failures.size() + families.equivalence_failures.size();
  report(2, mismatches == 0 && families.graphs_checked > 0,
         "recognizer vs exact multiplicity: " + counts(corpus) + " plus trees n<=13 and uni/bicyclic n<=11 (" +
             counts(families) + "), " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(corpus.optimal_pairs + families.optimal_pairs) + " optimal pairs");

  const std::size_t form = corpus.lambda_form_failures.size() + families.lambda_form_failures.size();
  report(3, form == 0, "classes at the bound are trig minimal polynomials: " + std::to_string(form) + " exceptions");

  LemmaOptions lo;
  lo.max_n = 8;
  lo.samples = 1000;
  const auto lemmas = verify_lemmas(lo);
  std::string lemma_detail;
  bool lemmas_ok = true;
  for (const char* name : {"path_law", "cycle_law", "path_deletion", "path_absorption", "edge_reduction"}) {
    const auto it = lemmas.lemmas.find(name);
    const bool ok = it != lemmas.lemmas.end() && it->second.checked > 0 && it->second.failures.empty();
    lemmas_ok = lemmas_ok && ok;
    lemma_detail += std::string(name) + " " +
                    (it == lemmas.lemmas.end() ? std::string("missing")
                                               : std::to_string(it->second.checked) + "/" +
                                                     std::to_string(it->second.failures.size())) +
                    "  ";
  }
  lemmas_ok = lemmas_ok && lemmas.passed();
  report(4, lemmas_ok, "lemma suite (checked/failed): " + lemma_detail);

  report(5, corpus.oracle_disagreements.empty() && corpus.guard_violations.empty(),
         "polynomial = nullity = numeric on every corpus pair: " +
             std::to_string(corpus.oracle_disagreements.size()) + " disagreements, " +
             std::to_string(corpus.guard_violations.size()) + " guard violations");

  std::size_t compared = 0, disagree = 0;
  for (std::size_t n = 4; n <= 13; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      if (pendant_count(t) < 3) continue;
      const Graph lt = line_graph(t).line;
      const auto blocks = block_structure(lt);
      for (const auto& l : lambda_candidates(t)) {
        if (!l.is_even_form()) continue;
        ++compared;
        if (tree_block_conditions(lt, blocks, l) != tree_certificate(t, l).optimal()) ++disagree;
      }
    }
  }
  report(6, disagree == 0 && compared > 0,
         "block conditions vs pendant congruence on trees n<=13: " + std::to_string(compared) + " pairs, " +
             std::to_string(disagree) + " disagreements");

  std::size_t positives = 0, positive_bad = 0, negative_bad = 0;
  for (CaseTag tag : {CaseTag::PathCase, CaseTag::TreeCase, CaseTag::AttachedCycles, CaseTag::TwoCyclesEdge,
                      CaseTag::ManyCycles}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto spec = random_family_spec(tag, seed);
      const Graph g = generate(spec);
      ++positives;
      if (optimal_certificate(g, spec.lambda).tag != tag || !attains_bound(g, spec.lambda)) ++positive_bad;
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_negative_bicyclic(seed);
    const Recognizer r(g);
    for (const auto& l : lambda_candidates(g))
      if (r.certify(l).optimal() || attains_bound(g, l)) {
        ++negative_bad;
        break;
      }
  }
  report(7, positive_bad == 0 && negative_bad == 0,
         std::to_string(positives) + " family instances (" + std::to_string(positive_bad) +
             " bad), 200 negative B/theta instances (" + std::to_string(negative_bad) + " optimal somewhere)");

  std::string mutation_detail;
  bool mutations_ok = true;
  for (Mutation m : {Mutation::PathModulus, Mutation::TreeCongruence, Mutation::CycleModulus}) {
    VerifyOptions opts;
    opts.mutation = m;
    const auto r = verify_main_theorem(7, opts);
    mutations_ok = mutations_ok && !r.equivalence_failures.empty();
    mutation_detail += std::string(to_string(m)) + " " + std::to_string(r.equivalence_failures.size()) + "  ";
  }
  report(8, mutations_ok, "mutant recognizers caught on n<=7 (failures): " + mutation_detail);

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.1f s\n", failed == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL", seconds);
  return failed == 0 ? 0 : 1;
}
