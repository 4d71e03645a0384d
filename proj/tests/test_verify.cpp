#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>

#include "lineopt/families.hpp"
#include "lineopt/line_graph.hpp"
#include "lineopt/verify.hpp"

using namespace lineopt;

TEST(ParallelFor, CoversEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(500);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, RethrowsWorkerErrors) {
  EXPECT_THROW(parallel_for(20, 3, [](std::size_t i) {
                 if (i == 7) throw Error(ErrorCode::InvalidParameter, "boom");
               }),
               Error);
}

TEST(ParallelFor, WorkerCountFromEnvironment) {
  setenv("LINEOPT_WORKERS", "3", 1);
  EXPECT_EQ(default_workers(), 3u);
  setenv("LINEOPT_WORKERS", "zero", 1);
  EXPECT_GE(default_workers(), 1u);
  unsetenv("LINEOPT_WORKERS");
}

TEST(Report, AbsorbAddsAndAppends) {
  VerificationReport a, b;
  a.graphs_checked = 2;
  b.graphs_checked = 3;
  a.lemmas["x"].checked = 1;
  b.lemmas["x"].checked = 4;
  b.lemmas["x"].failures.push_back({"A_", "bad"});
  a.absorb(b);
  EXPECT_EQ(a.graphs_checked, 5u);
  EXPECT_EQ(a.lemmas["x"].checked, 5u);
  EXPECT_FALSE(a.passed());
}

TEST(MainTheorem, HoldsOnSmallCorpus) {
  VerifyOptions opts;
  opts.oracles = true;
  const auto r = verify_main_theorem(6, opts);
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  EXPECT_EQ(r.graphs_checked + r.cycles_skipped, 1u + 2 + 6 + 21 + 112);
  EXPECT_EQ(r.cycles_skipped, 4u);
  EXPECT_GT(r.optimal_pairs, 0u);

  const auto j = to_json(r);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["graphs_checked"], r.graphs_checked);
  EXPECT_NE(summary_table(r).find("PASS"), std::string::npos);
}

TEST(MainTheorem, FamiliesPass) {
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    graphs.push_back(generate(random_family_spec(CaseTag::AttachedCycles, seed)));
    graphs.push_back(generate(random_family_spec(CaseTag::TwoCyclesEdge, seed)));
    graphs.push_back(random_negative_bicyclic(seed));
  }
  const auto r = verify_graphs(graphs);
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  EXPECT_GE(r.optimal_pairs, 12u);
}

TEST(MainTheorem, EachMutationIsCaught) {
  for (Mutation m : {Mutation::PathModulus, Mutation::TreeCongruence, Mutation::CycleModulus}) {
    VerifyOptions opts;
    opts.mutation = m;
    const auto r = verify_main_theorem(7, opts);
    EXPECT_FALSE(r.equivalence_failures.empty()) << to_string(m);
  }
}

TEST(Lemmas, HoldOnSmallScale) {
  LemmaOptions opts;
  opts.max_n = 5;
  opts.samples = 40;
  opts.max_path = 40;
  opts.max_cycle = 30;
  const auto r = verify_lemmas(opts);
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  for (const char* name : {"path_law", "cycle_law", "path_deletion", "bridge_identity", "path_absorption",
                           "edge_reduction", "annihilator_bound"}) {
    ASSERT_TRUE(r.lemmas.contains(name)) << name;
    EXPECT_GT(r.lemmas.at(name).checked, 0u) << name;
  }
}

TEST(Lemmas, DeterministicForSeed) {
  LemmaOptions opts;
  opts.max_n = 4;
  opts.samples = 15;
  opts.max_path = 10;
  opts.max_cycle = 10;
  opts.seed = 9;
  auto a = to_json(verify_lemmas(opts));
  auto b = to_json(verify_lemmas(opts));
  a.erase("elapsed_seconds");
  b.erase("elapsed_seconds");
  EXPECT_EQ(a, b);
}

TEST(CrossCheck, AgreesOnNamedGraphs) {
  EXPECT_TRUE(cross_check(petersen_graph()));
  EXPECT_TRUE(cross_check(line_graph(two_cycles_edge(4, 4)).line));
  EXPECT_TRUE(cross_check(path_graph(11)));
  EXPECT_TRUE(cross_check_details(cycle_graph(12)).empty());
}
