#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "lineopt/characterize.hpp"
#include "lineopt/graph.hpp"
#include "lineopt/spectra.hpp"

namespace lineopt {

/// P_n with n = t * b, so the end-to-end distance is b - 1 (mod b).
/// Throws Error{InvalidParameter} when t == 0.
Graph make_congruent_path(const AlgebraicEigenvalue& lambda, std::size_t t);

/// Spider whose legs all have length q + r(2q + 1). Needs an even-form
/// lambda and legs >= 3, else Error{InvalidParameter}.
Graph make_congruent_spider(const AlgebraicEigenvalue& lambda, std::size_t legs, std::size_t r);

/// Random tree whose pendant pairs are all at distance 2q (mod 2q + 1): every
/// vertex with two or more children sits at a depth divisible by 2q + 1 and
/// every leaf at depth q (mod 2q + 1). At least min_pendants leaves.
Graph random_congruent_tree(const AlgebraicEigenvalue& lambda, std::size_t min_pendants, std::uint64_t seed);

/// Hangs a cycle of orders[i] off pendants[i]; the first new vertex of each
/// cycle is joined to the pendant. Throws Error{NotPendant |
/// DuplicateAttachment | InvalidParameter}.
Graph attach_cycles(const Graph& t, std::span<const Vertex> pendants, std::span<const std::size_t> orders);

/// C_{n1} on 0..n1-1 and C_{n2} on n1..n1+n2-1 plus the edge (0, n1).
Graph two_cycles_edge(std::size_t n1, std::size_t n2);

/// Cycles C_l and C_k joined by a path on x vertices whose ends lie on the
/// cycles; x = 1 makes the cycles share a vertex.
Graph make_B(std::size_t l, std::size_t x, std::size_t k);

/// Two vertices joined by three internally disjoint paths with k', x', l'
/// edges. At most one of them may be 1.
Graph make_theta(std::size_t k, std::size_t x, std::size_t l);

struct FamilySpec {
  CaseTag case_tag = CaseTag::PathCase;
  AlgebraicEigenvalue lambda{1, 2};
  /// t for paths, r for spider legs.
  std::size_t repeat = 1;
  /// Spider legs, or the minimum pendant count of a random tree.
  std::size_t legs = 3;
  std::vector<std::size_t> cycle_orders;
  /// Grow a random congruent tree instead of a spider (even-form lambda only).
  bool random_tree = false;
  std::uint64_t seed = 0;
};

/// Throws Error{InvalidParameter} when the spec breaks its case's congruences.
Graph generate(const FamilySpec& spec);

/// A valid spec for the given case with parameters drawn from the seed.
FamilySpec random_family_spec(CaseTag tag, std::uint64_t seed);

nlohmann::json to_json(const FamilySpec& spec);
/// Throws Error{ParseError | InvalidParameter | NonCanonical}.
FamilySpec family_spec_from_json(const nlohmann::json& j);

/// B(l, x, k) or theta shapes that cannot be optimal for any lambda.
Graph random_negative_bicyclic(std::uint64_t seed);

}  // namespace lineopt
