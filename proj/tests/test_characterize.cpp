#include <gtest/gtest.h>

#include "lineopt/characterize.hpp"
#include "lineopt/enumerate.hpp"
#include "lineopt/families.hpp"
#include "lineopt/line_graph.hpp"
#include "lineopt/spectra.hpp"

using namespace lineopt;

namespace {

const AlgebraicEigenvalue kZero{1, 2};

Graph c4_with_tail(std::size_t tail) {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  Vertex prev = 0;
  for (std::size_t i = 0; i < tail; ++i) {
    e.emplace_back(prev, static_cast<Vertex>(4 + i));
    prev = static_cast<Vertex>(4 + i);
  }
  return Graph::build(4 + tail, e);
}

NotOptimalReason reason_of(const OptimalityCertificate& c) {
  return std::get<NotOptimalParams>(c.parameters).reason;
}

}  // namespace

TEST(LambdaCandidates, SortedCanonicalAndDegreeBounded) {
  const auto one = lambda_candidates(path_graph(2));
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0], AlgebraicEigenvalue(1, 2));
  EXPECT_EQ(one[1], AlgebraicEigenvalue(1, 3));
  EXPECT_EQ(one[2], AlgebraicEigenvalue(2, 3));

  const auto three = lambda_candidates(path_graph(4));
  for (unsigned a = 1; a < 5; ++a)
    EXPECT_NE(std::find(three.begin(), three.end(), AlgebraicEigenvalue(a, 5)), three.end());
  for (const auto& l : lambda_candidates(petersen_graph())) {
    EXPECT_EQ(std::gcd(l.a(), l.b()), 1u);
    EXPECT_LE(l.min_poly_degree(), 15u);
  }
  EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));
}

TEST(PathCertificate, Examples) {
  auto c = path_certificate(path_graph(4), kZero);
  ASSERT_EQ(c.tag, CaseTag::PathCase);
  EXPECT_EQ(std::get<PathParams>(c.parameters).i, 1u);
  EXPECT_EQ(std::get<PathParams>(c.parameters).m, 1u);
  EXPECT_FALSE(path_certificate(path_graph(4), {2, 3}).optimal());
  EXPECT_FALSE(path_certificate(path_graph(5), {1, 4}).optimal());
  EXPECT_TRUE(path_certificate(path_graph(4), {1, 4}).optimal());
}

TEST(PathCertificate, RejectsNonPaths) {
  try {
    path_certificate(star_graph(3), kZero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPath);
  }
}

TEST(TreeCertificate, Examples) {
  auto c = tree_certificate(star_graph(3), {2, 3});
  ASSERT_EQ(c.tag, CaseTag::TreeCase);
  EXPECT_EQ(std::get<TreeParams>(c.parameters).k, 1u);
  EXPECT_EQ(std::get<TreeParams>(c.parameters).q, 1u);

  auto odd = tree_certificate(star_graph(3), kZero);
  ASSERT_EQ(odd.tag, CaseTag::NotOptimal);
  EXPECT_EQ(reason_of(odd), NotOptimalReason::LambdaForm);

  const std::size_t legs[] = {2, 2, 2};
  auto spider = tree_certificate(spider_graph(legs), {2, 5});
  ASSERT_EQ(spider.tag, CaseTag::TreeCase);
  EXPECT_EQ(std::get<TreeParams>(spider.parameters).q, 2u);

  EXPECT_EQ(tree_certificate(path_graph(4), kZero).tag, CaseTag::PathCase);
  EXPECT_THROW(tree_certificate(cycle_graph(4), kZero), Error);
}

TEST(TreeBlockConditions, Examples) {
  const Graph k3 = line_graph(star_graph(3)).line;
  EXPECT_TRUE(tree_block_conditions(k3, block_structure(k3), {2, 3}));
  const std::size_t legs[] = {2, 2, 2};
  const Graph ls = line_graph(spider_graph(legs)).line;
  EXPECT_TRUE(tree_block_conditions(ls, block_structure(ls), {2, 5}));
  EXPECT_FALSE(tree_block_conditions(ls, block_structure(ls), {2, 3}));
}

// A pendant edge whose nearest major block is not external still constrains
// the distance to every external block.
TEST(TreeBlockConditions, ExternalVertexOutsideExternalBlocks) {
  const Graph t = Graph::build(13, {{0, 12}, {1, 12}, {2, 11}, {3, 11}, {4, 9}, {5, 8}, {5, 12}, {6, 7}, {6, 11},
                                    {7, 10}, {8, 10}, {9, 10}});
  const Graph lt = line_graph(t).line;
  EXPECT_FALSE(tree_block_conditions(lt, block_structure(lt), {2, 3}));
  EXPECT_FALSE(tree_certificate(t, {2, 3}).optimal());
  EXPECT_EQ(multiplicity(lt, {2, 3}), 3u);
}

// The block conditions on L(T) and the pendant-pair congruence on T agree.
TEST(TreeBlockConditions, MatchesPendantCongruenceOnAllSmallTrees) {
  std::size_t compared = 0;
  for (std::size_t n = 4; n <= 11; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      if (pendant_count(t) < 3) continue;
      const Graph lt = line_graph(t).line;
      const auto blocks = block_structure(lt);
      for (const auto& l : lambda_candidates(t)) {
        if (!l.is_even_form()) continue;
        const bool congruence = tree_certificate(t, l).optimal();
        EXPECT_EQ(tree_block_conditions(lt, blocks, l), congruence) << n << " " << l.to_string();
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 1000u);
}

TEST(Decompose, CycleWithTail) {
  auto result = pendant_cycle_decompose(c4_with_tail(2));
  ASSERT_TRUE(std::holds_alternative<PendantCycleDecomposition>(result));
  const auto& d = std::get<PendantCycleDecomposition>(result);
  EXPECT_EQ(d.tree.order(), 2u);
  ASSERT_EQ(d.attachments.size(), 1u);
  EXPECT_EQ(d.attachments[0].order, 4u);
  EXPECT_EQ(d.attachments[0].cycle.size(), 4u);
}

TEST(Decompose, Failures) {
  auto theta = pendant_cycle_decompose(make_theta(2, 2, 2));
  ASSERT_TRUE(std::holds_alternative<DecompositionFailure>(theta));
  EXPECT_EQ(std::get<DecompositionFailure>(theta).reason, DecompositionFailureReason::CyclesShareVertices);

  auto two = pendant_cycle_decompose(two_cycles_edge(3, 3));
  ASSERT_TRUE(std::holds_alternative<DecompositionFailure>(two));
  EXPECT_EQ(std::get<DecompositionFailure>(two).reason, DecompositionFailureReason::TwoCyclesShape);
  EXPECT_EQ(std::get<DecompositionFailure>(two).cycle_orders, (std::vector<std::size_t>{3, 3}));

  // a cycle vertex of degree 4
  auto heavy = pendant_cycle_decompose(Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}}));
  ASSERT_TRUE(std::holds_alternative<DecompositionFailure>(heavy));
  EXPECT_EQ(std::get<DecompositionFailure>(heavy).reason, DecompositionFailureReason::AttachmentDegreeNotThree);

  // triangle with two major vertices
  auto twice = pendant_cycle_decompose(Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}));
  ASSERT_TRUE(std::holds_alternative<DecompositionFailure>(twice));
  EXPECT_EQ(std::get<DecompositionFailure>(twice).reason, DecompositionFailureReason::MultipleMajorVertices);

  // attached to the middle of a path
  auto middle = pendant_cycle_decompose(Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {0, 4}, {3, 4}, {4, 5}}));
  ASSERT_TRUE(std::holds_alternative<DecompositionFailure>(middle));
  EXPECT_EQ(std::get<DecompositionFailure>(middle).reason, DecompositionFailureReason::AttachmentNotTreePendant);

  EXPECT_THROW(pendant_cycle_decompose(cycle_graph(5)), Error);
}

TEST(OptimalCertificate, Examples) {
  auto attached = optimal_certificate(c4_with_tail(2), kZero);
  ASSERT_EQ(attached.tag, CaseTag::AttachedCycles);
  const auto& p = std::get<AttachedCyclesParams>(attached.parameters);
  EXPECT_EQ(p.c, 1u);
  EXPECT_EQ(p.cycle_orders, std::vector<std::size_t>{4});
  EXPECT_EQ(p.tree_vertices.size(), 2u);
  EXPECT_EQ(multiplicity(line_graph(c4_with_tail(2)).line, kZero), 2u);

  auto pair = optimal_certificate(two_cycles_edge(4, 4), kZero);
  ASSERT_EQ(pair.tag, CaseTag::TwoCyclesEdge);
  EXPECT_EQ(std::get<TwoCyclesParams>(pair.parameters).n1, 4u);
  EXPECT_EQ(multiplicity(line_graph(two_cycles_edge(4, 4)).line, kZero), 3u);

  auto shared = optimal_certificate(make_B(4, 1, 4), kZero);
  ASSERT_EQ(shared.tag, CaseTag::NotOptimal);
  EXPECT_EQ(reason_of(shared), NotOptimalReason::Shape);

  // a single pendant edge on C_4 leaves no tree pendant for the cycle
  EXPECT_FALSE(optimal_certificate(c4_with_tail(1), kZero).optimal());
  EXPECT_FALSE(attains_bound(c4_with_tail(1), kZero));
}

TEST(OptimalCertificate, ReasonOrder) {
  const Graph three = attach_cycles(star_graph(3), std::vector<Vertex>{1, 2, 3}, std::vector<std::size_t>{3, 3, 3});
  EXPECT_EQ(optimal_certificate(three, {2, 3}).tag, CaseTag::ManyCycles);
  EXPECT_EQ(reason_of(optimal_certificate(three, {1, 3})), NotOptimalReason::LambdaForm);
  EXPECT_EQ(reason_of(optimal_certificate(three, {2, 5})), NotOptimalReason::CycleOrders);

  // orders fine but tree pendants at the wrong distance
  const Graph bent = attach_cycles(path_graph(3), std::vector<Vertex>{0}, std::vector<std::size_t>{4});
  EXPECT_EQ(reason_of(optimal_certificate(bent, kZero)), NotOptimalReason::TreeCongruence);

  // c = 3 on a tree with only two pendants
  EXPECT_EQ(optimal_certificate(two_cycles_edge(3, 4), {2, 3}).tag, CaseTag::NotOptimal);
}

TEST(OptimalCertificate, ManyCyclesWithoutPendants) {
  const Graph g = attach_cycles(star_graph(3), std::vector<Vertex>{1, 2, 3}, std::vector<std::size_t>{3, 3, 3});
  EXPECT_EQ(pendant_count(g), 0u);
  EXPECT_TRUE(attains_bound(g, {2, 3}));
}

TEST(OptimalCertificate, Errors) {
  try {
    optimal_certificate(cycle_graph(6), kZero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsACycle);
  }
  try {
    optimal_certificate(Graph::build(4, {{0, 1}, {2, 3}}), kZero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(OptimalCertificate, Json) {
  const auto j = to_json(optimal_certificate(two_cycles_edge(4, 4), kZero));
  EXPECT_EQ(j["case_tag"], "TwoCyclesEdge");
  EXPECT_EQ(j["lambda"]["a"], 1);
  EXPECT_EQ(j["lambda"]["b"], 2);
  EXPECT_FALSE(j.contains("reason"));
  const auto n = to_json(optimal_certificate(make_B(4, 1, 4), kZero));
  EXPECT_EQ(n["case_tag"], "NotOptimal");
  EXPECT_TRUE(n.contains("reason"));
}

TEST(EdgeReduction, Examples) {
  auto good = edge_reduction_probe(c4_with_tail(2), kZero);
  EXPECT_TRUE(good.optimal);
  EXPECT_TRUE(good.mult_drop_ok && good.sub_optimal_ok && good.pendant_increment_ok);

  auto bad = edge_reduction_probe(make_B(4, 1, 4), kZero);
  EXPECT_FALSE(bad.optimal);
  EXPECT_FALSE(bad.mult_drop_ok && bad.sub_optimal_ok && bad.pendant_increment_ok);

  auto theta = edge_reduction_probe(make_theta(2, 2, 2), kZero);
  EXPECT_EQ(theta.optimal, theta.mult_drop_ok && theta.sub_optimal_ok && theta.pendant_increment_ok);

  EXPECT_THROW(edge_reduction_probe(path_graph(5), kZero), Error);
}

TEST(Recognizer, SoundAndCompleteOnSmallGraphs) {
  std::size_t optimal = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      if (is_cycle(g)) continue;
      const Recognizer r(g);
      const Graph lg = line_graph(g).line;
      for (const auto& l : lambda_candidates(g)) {
        const bool exact = multiplicity(lg, l) == r.bound();
        EXPECT_EQ(r.certify(l).optimal(), exact) << g.size() << " " << l.to_string();
        optimal += exact;
      }
    }
  }
  EXPECT_GT(optimal, 10u);
}
