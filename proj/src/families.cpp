#include "lineopt/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace lineopt {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

unsigned cycle_modulus(const AlgebraicEigenvalue& lambda) {
  return lambda.is_even_form() ? lambda.b() : 2 * lambda.b();
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

AlgebraicEigenvalue random_lambda(std::mt19937_64& rng, unsigned max_b) {
  const unsigned b = static_cast<unsigned>(uniform(rng, 2, max_b));
  std::vector<unsigned> as;
  for (unsigned a = 1; a < b; ++a)
    if (std::gcd(a, b) == 1) as.push_back(a);
  return {as[uniform(rng, 0, as.size() - 1)], b};
}

AlgebraicEigenvalue random_even_lambda(std::mt19937_64& rng, std::vector<unsigned> bs) {
  const unsigned b = bs[uniform(rng, 0, bs.size() - 1)];
  std::vector<unsigned> as;
  for (unsigned a = 2; a < b; a += 2)
    if (std::gcd(a, b) == 1) as.push_back(a);
  return {as[uniform(rng, 0, as.size() - 1)], b};
}

std::vector<std::size_t> random_orders(std::mt19937_64& rng, const AlgebraicEigenvalue& lambda, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(cycle_modulus(lambda) * uniform(rng, 1, 2));
  return out;
}

void check_orders(const FamilySpec& spec) {
  const unsigned modulus = cycle_modulus(spec.lambda);
  for (auto o : spec.cycle_orders)
    require(o >= 3 && o % modulus == 0, "cycle order " + std::to_string(o) + " is not a multiple of " +
                                            std::to_string(modulus));
}

Graph with_cycles(const Graph& tree, const FamilySpec& spec) {
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < tree.order(); ++v)
    if (tree.degree(v) == 1) leaves.push_back(v);
  require(leaves.size() >= spec.cycle_orders.size(), "tree has fewer pendants than cycles");
  std::mt19937_64 rng(spec.seed);
  std::shuffle(leaves.begin(), leaves.end(), rng);
  leaves.resize(spec.cycle_orders.size());
  return attach_cycles(tree, leaves, spec.cycle_orders);
}

}  // namespace

Graph make_congruent_path(const AlgebraicEigenvalue& lambda, std::size_t t) {
  require(t >= 1, "t must be positive");
  return path_graph(t * lambda.b());
}

Graph make_congruent_spider(const AlgebraicEigenvalue& lambda, std::size_t legs, std::size_t r) {
  require(lambda.is_even_form(), "spider needs lambda = 2cos(2k pi/(2q+1))");
  require(legs >= 3, "spider needs at least three legs");
  const std::size_t q = (lambda.b() - 1) / 2;
  std::vector<std::size_t> lengths(legs, q + r * lambda.b());
  return spider_graph(lengths);
}

Graph random_congruent_tree(const AlgebraicEigenvalue& lambda, std::size_t min_pendants, std::uint64_t seed) {
  require(lambda.is_even_form(), "congruent trees need lambda = 2cos(2k pi/(2q+1))");
  const std::size_t b = lambda.b();
  const std::size_t q = (b - 1) / 2;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = 1;
  auto chain = [&](Vertex from, std::size_t length) {
    for (std::size_t i = 0; i < length; ++i) {
      edges.emplace_back(from, next);
      from = next++;
    }
    return from;
  };

  std::vector<std::pair<Vertex, std::size_t>> branch_points{{0, std::max<std::size_t>(3, min_pendants) + uniform(rng, 0, 1)}};
  std::size_t budget = 2;  // extra branch points allowed
  for (std::size_t idx = 0; idx < branch_points.size(); ++idx) {
    const auto [root, arms] = branch_points[idx];
    for (std::size_t a = 0; a < arms; ++a) {
      if (budget > 0 && uniform(rng, 0, 3) == 0) {
        --budget;
        const Vertex branch = chain(root, b * uniform(rng, 1, 2));
        branch_points.emplace_back(branch, uniform(rng, 2, 3));
      } else {
        chain(root, q + b * uniform(rng, 0, 1));
      }
    }
  }
  return Graph::build(next, edges);
}

Graph attach_cycles(const Graph& t, std::span<const Vertex> pendants, std::span<const std::size_t> orders) {
  require(pendants.size() == orders.size(), "one cycle order per pendant");
  std::vector<bool> used(t.order(), false);
  for (Vertex v : pendants) {
    if (v >= t.order()) throw Error(ErrorCode::InvalidVertex, "pendant vertex out of range");
    if (t.degree(v) != 1) throw Error(ErrorCode::NotPendant, "vertex " + std::to_string(v) + " is not pendant");
    if (used[v]) throw Error(ErrorCode::DuplicateAttachment, "vertex " + std::to_string(v) + " used twice");
    used[v] = true;
  }
  auto edges = t.edge_pairs();
  Vertex next = static_cast<Vertex>(t.order());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    require(orders[i] >= 3, "cycle order must be at least 3");
    const Vertex first = next;
    for (std::size_t j = 0; j < orders[i]; ++j)
      edges.emplace_back(first + j, first + (j + 1) % orders[i]);
    edges.emplace_back(pendants[i], first);
    next += static_cast<Vertex>(orders[i]);
  }
  return Graph::build(next, edges);
}

Graph two_cycles_edge(std::size_t n1, std::size_t n2) {
  require(n1 >= 3 && n2 >= 3, "cycle orders must be at least 3");
  return make_B(n1, 2, n2);
}

Graph make_B(std::size_t l, std::size_t x, std::size_t k) {
  require(l >= 3 && k >= 3 && x >= 1, "B(l, x, k) needs l, k >= 3 and x >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < l; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % l));
  Vertex end = 0;
  Vertex next = static_cast<Vertex>(l);
  for (std::size_t i = 1; i < x; ++i) {
    edges.emplace_back(end, next);
    end = next++;
  }
  // second cycle through `end`
  Vertex prev = end;
  for (std::size_t i = 1; i < k; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, end);
  return Graph::build(next, edges);
}

Graph make_theta(std::size_t k, std::size_t x, std::size_t l) {
  require(k >= 1 && x >= 1 && l >= 1, "theta path lengths must be positive");
  require((k == 1) + (x == 1) + (l == 1) <= 1, "at most one theta path may be a single edge");
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = 2;
  for (std::size_t len : {k, x, l}) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::build(next, edges);
}

Graph generate(const FamilySpec& spec) {
  const auto& lambda = spec.lambda;
  switch (spec.case_tag) {
    case CaseTag::PathCase:
      return make_congruent_path(lambda, spec.repeat);
    case CaseTag::TreeCase:
      if (spec.random_tree) return random_congruent_tree(lambda, spec.legs, spec.seed);
      return make_congruent_spider(lambda, spec.legs, spec.repeat);
    case CaseTag::AttachedCycles: {
      require(spec.cycle_orders.size() == 1 || spec.cycle_orders.size() == 2, "case needs one or two cycles");
      check_orders(spec);
      const Graph tree = spec.random_tree ? random_congruent_tree(lambda, spec.legs, spec.seed)
                                          : make_congruent_path(lambda, spec.repeat);
      return with_cycles(tree, spec);
    }
    case CaseTag::TwoCyclesEdge:
      require(spec.cycle_orders.size() == 2, "case needs exactly two cycles");
      check_orders(spec);
      return two_cycles_edge(spec.cycle_orders[0], spec.cycle_orders[1]);
    case CaseTag::ManyCycles: {
      require(lambda.is_even_form(), "three or more cycles need lambda = 2cos(2k pi/(2q+1))");
      require(spec.cycle_orders.size() >= 3, "case needs at least three cycles");
      check_orders(spec);
      const std::size_t c = spec.cycle_orders.size();
      const Graph tree = spec.random_tree ? random_congruent_tree(lambda, std::max(c, spec.legs), spec.seed)
                                          : make_congruent_spider(lambda, std::max(c, spec.legs), spec.repeat);
      return with_cycles(tree, spec);
    }
    case CaseTag::NotOptimal:
      break;
  }
  throw Error(ErrorCode::InvalidParameter, "no generator for NotOptimal");
}

FamilySpec random_family_spec(CaseTag tag, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FamilySpec spec;
  spec.case_tag = tag;
  spec.seed = seed;
  switch (tag) {
    case CaseTag::PathCase:
      spec.lambda = random_lambda(rng, 9);
      spec.repeat = uniform(rng, 1, 3);
      break;
    case CaseTag::TreeCase:
      spec.lambda = random_even_lambda(rng, {3, 5, 7});
      spec.legs = uniform(rng, 3, 5);
      spec.repeat = uniform(rng, 0, 1);
      spec.random_tree = uniform(rng, 0, 1) == 1;
      break;
    case CaseTag::AttachedCycles:
      spec.lambda = random_lambda(rng, 6);
      spec.repeat = uniform(rng, 1, 2);
      spec.random_tree = spec.lambda.is_even_form() && uniform(rng, 0, 1) == 1;
      spec.cycle_orders = random_orders(rng, spec.lambda, uniform(rng, 1, 2));
      break;
    case CaseTag::TwoCyclesEdge:
      spec.lambda = random_lambda(rng, 6);
      spec.cycle_orders = random_orders(rng, spec.lambda, 2);
      break;
    case CaseTag::ManyCycles:
      spec.lambda = random_even_lambda(rng, {3, 5});
      spec.cycle_orders = random_orders(rng, spec.lambda, uniform(rng, 3, 4));
      spec.legs = spec.cycle_orders.size() + uniform(rng, 0, 1);
      spec.repeat = uniform(rng, 0, 1);
      spec.random_tree = uniform(rng, 0, 1) == 1;
      break;
    case CaseTag::NotOptimal:
      throw Error(ErrorCode::InvalidParameter, "no generator for NotOptimal");
  }
  return spec;
}

nlohmann::json to_json(const FamilySpec& spec) {
  return {{"case", to_string(spec.case_tag)},
          {"lambda", {{"a", spec.lambda.a()}, {"b", spec.lambda.b()}}},
          {"repeat", spec.repeat},
          {"legs", spec.legs},
          {"cycle_orders", spec.cycle_orders},
          {"random_tree", spec.random_tree},
          {"seed", spec.seed}};
}

FamilySpec family_spec_from_json(const nlohmann::json& j) {
  try {
    FamilySpec spec;
    const std::string tag = j.at("case").get<std::string>();
    const CaseTag tags[] = {CaseTag::PathCase, CaseTag::TreeCase, CaseTag::AttachedCycles, CaseTag::TwoCyclesEdge,
                            CaseTag::ManyCycles};
    auto it = std::find_if(std::begin(tags), std::end(tags), [&](CaseTag t) { return tag == to_string(t); });
    if (it == std::end(tags)) throw Error(ErrorCode::InvalidParameter, "unknown case " + tag);
    spec.case_tag = *it;
    spec.lambda = AlgebraicEigenvalue(j.at("lambda").at("a").get<unsigned>(), j.at("lambda").at("b").get<unsigned>());
    spec.repeat = j.value("repeat", std::size_t{1});
    spec.legs = j.value("legs", std::size_t{3});
    spec.cycle_orders = j.value("cycle_orders", std::vector<std::size_t>{});
    spec.random_tree = j.value("random_tree", false);
    spec.seed = j.value("seed", std::uint64_t{0});
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("family spec: ") + e.what());
  }
}

Graph random_negative_bicyclic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coprimeish_pair = [&] {
    while (true) {
      const std::size_t l = uniform(rng, 3, 8);
      const std::size_t k = uniform(rng, 3, 8);
      if (std::gcd(l, k) <= 2) return std::pair{l, k};
    }
  };
  switch (uniform(rng, 0, 4)) {
    case 0:
      return make_B(uniform(rng, 3, 8), 1, uniform(rng, 3, 8));
    case 1:
      return make_B(uniform(rng, 3, 8), 3, uniform(rng, 3, 8));
    case 2: {
      auto [l, k] = coprimeish_pair();
      return make_B(l, 2, k);
    }
    case 3: {
      auto [l, k] = coprimeish_pair();
      return make_B(l, uniform(rng, 4, 6), k);
    }
    default: {
      while (true) {
        const std::size_t a = uniform(rng, 1, 5), b = uniform(rng, 1, 5), c = uniform(rng, 1, 5);
        if ((a == 1) + (b == 1) + (c == 1) <= 1) return make_theta(a, b, c);
      }
    }
  }
}

}  // namespace lineopt
