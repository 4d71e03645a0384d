#include <gtest/gtest.h>

#include "lineopt/families.hpp"
#include "lineopt/line_graph.hpp"

using namespace lineopt;

namespace {

std::size_t bound(const Graph& g) { return 2 * cyclomatic_number(g) + pendant_count(g) - 1; }

void expect_code(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(CongruentPath, Examples) {
  EXPECT_EQ(make_congruent_path({1, 2}, 2), path_graph(4));
  EXPECT_EQ(make_congruent_path({2, 3}, 1), path_graph(3));
  EXPECT_EQ(make_congruent_path({1, 4}, 1), path_graph(4));
  expect_code(ErrorCode::InvalidParameter, [] { make_congruent_path({1, 2}, 0); });
}

TEST(CongruentSpider, Examples) {
  EXPECT_EQ(make_congruent_spider({2, 3}, 3, 0), star_graph(3));
  const std::size_t two[] = {2, 2, 2};
  EXPECT_EQ(make_congruent_spider({2, 5}, 3, 0), spider_graph(two));
  const Graph big = make_congruent_spider({2, 3}, 4, 1);
  EXPECT_EQ(big.order(), 17u);
  EXPECT_EQ(pendant_count(big), 4u);
  expect_code(ErrorCode::InvalidParameter, [] { make_congruent_spider({1, 3}, 3, 0); });
  expect_code(ErrorCode::InvalidParameter, [] { make_congruent_spider({2, 3}, 2, 0); });
}

TEST(RandomCongruentTree, CongruentAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const AlgebraicEigenvalue l(seed % 2 ? 2 : 4, seed % 2 ? 5 : 7);
    const Graph t = random_congruent_tree(l, 3 + seed % 3, seed);
    EXPECT_EQ(cyclomatic_number(t), 0u);
    EXPECT_GE(pendant_count(t), 3 + seed % 3);
    EXPECT_EQ(tree_certificate(t, l).tag, CaseTag::TreeCase);
    EXPECT_EQ(t, random_congruent_tree(l, 3 + seed % 3, seed));
  }
}

TEST(AttachCycles, Examples) {
  const Graph tail = attach_cycles(path_graph(2), std::vector<Vertex>{1}, std::vector<std::size_t>{4});
  EXPECT_EQ(tail.order(), 6u);
  EXPECT_EQ(cyclomatic_number(tail), 1u);
  EXPECT_EQ(pendant_count(tail), 1u);
  EXPECT_TRUE(tail.adjacent(1, 2));

  const Graph three = attach_cycles(star_graph(3), std::vector<Vertex>{1, 2, 3}, std::vector<std::size_t>{3, 3, 3});
  EXPECT_EQ(cyclomatic_number(three), 3u);
  EXPECT_EQ(pendant_count(three), 0u);

  const Graph both = attach_cycles(path_graph(2), std::vector<Vertex>{0, 1}, std::vector<std::size_t>{4, 4});
  EXPECT_EQ(cyclomatic_number(both), 2u);
  EXPECT_EQ(pendant_count(both), 0u);
  EXPECT_EQ(optimal_certificate(both, {1, 2}).tag, CaseTag::AttachedCycles);
}

TEST(AttachCycles, Errors) {
  const Graph p3 = path_graph(3);
  expect_code(ErrorCode::NotPendant, [&] { attach_cycles(p3, std::vector<Vertex>{1}, std::vector<std::size_t>{3}); });
  expect_code(ErrorCode::DuplicateAttachment,
              [&] { attach_cycles(p3, std::vector<Vertex>{0, 0}, std::vector<std::size_t>{3, 3}); });
  expect_code(ErrorCode::InvalidParameter,
              [&] { attach_cycles(p3, std::vector<Vertex>{0}, std::vector<std::size_t>{3, 3}); });
  expect_code(ErrorCode::InvalidParameter, [&] { attach_cycles(p3, std::vector<Vertex>{0}, std::vector<std::size_t>{2}); });
}

TEST(TwoCyclesEdge, Examples) {
  const Graph g = two_cycles_edge(4, 4);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_EQ(multiplicity(line_graph(g).line, {1, 2}), 3u);
  EXPECT_TRUE(attains_bound(two_cycles_edge(3, 3), {2, 3}));
  const Graph mixed = two_cycles_edge(3, 4);
  for (const auto& l : lambda_candidates(mixed)) EXPECT_FALSE(attains_bound(mixed, l)) << l.to_string();
}

TEST(Bicyclic, Shapes) {
  const Graph b = make_B(3, 1, 3);
  EXPECT_EQ(b.order(), 5u);
  EXPECT_EQ(b.size(), 6u);
  EXPECT_EQ(cyclomatic_number(b), 2u);
  EXPECT_EQ(make_B(4, 2, 4), two_cycles_edge(4, 4));
  EXPECT_EQ(make_B(3, 4, 5).order(), 10u);

  const Graph t = make_theta(1, 2, 2);
  EXPECT_EQ(t.order(), 4u);
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(cyclomatic_number(t), 2u);
  expect_code(ErrorCode::InvalidParameter, [] { make_theta(1, 1, 1); });
  expect_code(ErrorCode::InvalidParameter, [] { make_theta(1, 1, 3); });
  expect_code(ErrorCode::InvalidParameter, [] { make_B(2, 1, 3); });
  expect_code(ErrorCode::InvalidParameter, [] { make_B(3, 0, 3); });
}

TEST(Bicyclic, NegativeShapesNeverOptimal) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_negative_bicyclic(seed);
    EXPECT_EQ(cyclomatic_number(g), 2u);
    for (const auto& l : lambda_candidates(g)) EXPECT_FALSE(attains_bound(g, l)) << seed << " " << l.to_string();
  }
}

TEST(Generate, EveryCaseAttainsTheBound) {
  const CaseTag tags[] = {CaseTag::PathCase, CaseTag::TreeCase, CaseTag::AttachedCycles, CaseTag::TwoCyclesEdge,
                          CaseTag::ManyCycles};
  for (CaseTag tag : tags) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const FamilySpec spec = random_family_spec(tag, seed);
      const Graph g = generate(spec);
      EXPECT_EQ(g, generate(spec));
      const auto cert = optimal_certificate(g, spec.lambda);
      EXPECT_EQ(cert.tag, tag) << to_json(spec).dump();
      EXPECT_EQ(multiplicity(line_graph(g).line, spec.lambda), bound(g)) << to_json(spec).dump();
    }
  }
}

TEST(Generate, RejectsBrokenCongruences) {
  FamilySpec s;
  s.case_tag = CaseTag::TreeCase;
  s.lambda = {1, 3};
  expect_code(ErrorCode::InvalidParameter, [&] { generate(s); });

  s.case_tag = CaseTag::TwoCyclesEdge;
  s.lambda = {1, 2};
  s.cycle_orders = {4, 6};
  expect_code(ErrorCode::InvalidParameter, [&] { generate(s); });

  s.case_tag = CaseTag::AttachedCycles;
  s.cycle_orders = {4, 4, 4};
  expect_code(ErrorCode::InvalidParameter, [&] { generate(s); });

  s.case_tag = CaseTag::NotOptimal;
  expect_code(ErrorCode::InvalidParameter, [&] { generate(s); });
}

TEST(Generate, JsonRoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FamilySpec spec = random_family_spec(CaseTag::ManyCycles, seed);
    const FamilySpec back = family_spec_from_json(to_json(spec));
    EXPECT_EQ(to_json(back), to_json(spec));
    EXPECT_EQ(generate(back), generate(spec));
  }
  expect_code(ErrorCode::NonCanonical, [] {
    family_spec_from_json(nlohmann::json{{"case", "PathCase"}, {"lambda", {{"a", 2}, {"b", 4}}}});
  });
  expect_code(ErrorCode::InvalidParameter, [] { family_spec_from_json(nlohmann::json{{"case", "Nope"}}); });
}
