#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lineopt/graph.hpp"
#include "lineopt/poly.hpp"

namespace lineopt {

/// lambda = 2 cos(a pi / b) with gcd(a, b) = 1 and 1 <= a < b.
///
/// With a even, b is odd and lambda = zeta + 1/zeta for a primitive b-th
/// root of unity; with a odd the root of unity is primitive of order 2b.
class AlgebraicEigenvalue {
 public:
  /// Throws Error{NonCanonical}.
  AlgebraicEigenvalue(unsigned a, unsigned b);

  unsigned a() const { return a_; }
  unsigned b() const { return b_; }
  double value() const;
  /// Order of the root of unity behind lambda.
  unsigned cyclotomic_index() const { return a_ % 2 == 0 ? b_ : 2 * b_; }
  unsigned min_poly_degree() const;
  /// True when lambda has the form 2cos(2k pi / (2q + 1)).
  bool is_even_form() const { return a_ % 2 == 0; }
  std::string to_string() const;

  friend auto operator<=>(const AlgebraicEigenvalue& x, const AlgebraicEigenvalue& y) {
    if (auto c = x.b_ <=> y.b_; c != 0) return c;
    return x.a_ <=> y.a_;
  }
  friend bool operator==(const AlgebraicEigenvalue&, const AlgebraicEigenvalue&) = default;

 private:
  unsigned a_;
  unsigned b_;
};

unsigned euler_phi(unsigned n);

/// det(xI - A(g)). Multimodular Hessenberg reduction with a Hadamard-style
/// coefficient bound, reconstructed by CRT.
IntPoly char_poly(const Graph& g);

/// Berkowitz's division-free algorithm directly over big integers.
IntPoly char_poly_berkowitz(const Graph& g);

/// The n-th cyclotomic polynomial (memoized, safe for concurrent callers).
IntPoly cyclotomic(unsigned n);

/// Monic minimal polynomial of lambda over Q, recovered from the cyclotomic
/// polynomial via Phi_n(x) = x^d Psi(x + 1/x).
IntPoly trig_min_poly(const AlgebraicEigenvalue& lambda);

/// Minimal polynomial of zeta_n + 1/zeta_n for n >= 3 (memoized).
IntPoly trig_min_poly_for_index(unsigned n);

/// Every canonical lambda whose minimal polynomial has degree <= max_degree,
/// sorted by (b, a).
std::vector<AlgebraicEigenvalue> trig_candidates(std::size_t max_degree);

/// Indices n >= 3 with phi(n)/2 <= max_degree, ascending.
std::vector<unsigned> trig_indices(std::size_t max_degree);

unsigned multiplicity(const Graph& g, const AlgebraicEigenvalue& lambda);
unsigned multiplicity(const IntPoly& char_polynomial, const AlgebraicEigenvalue& lambda);

/// Multiplicity shared by all zeta_n + 1/zeta_n conjugates. A modular
/// evaluation rules out most indices before any exact division.
unsigned multiplicity_for_index(const IntPoly& char_polynomial, unsigned cyclotomic_index);

struct EigClass {
  IntPoly factor;
  unsigned multiplicity;
};

/// Squarefree decomposition of the characteristic polynomial.
std::vector<EigClass> eig_classes(const Graph& g);
std::vector<EigClass> eig_classes(const IntPoly& char_polynomial);

/// dim of { x : A x = lambda x, x_u = 0 for u in u_set } over Q(lambda).
std::size_t annihilator_dimension(const Graph& g, const AlgebraicEigenvalue& lambda,
                                  std::span<const Vertex> u_set);

/// Same as annihilator_dimension(g, lambda, {}) but works from the cyclotomic
/// index directly; conjugate eigenvalues share the result.
std::size_t nullity_over_field(const Graph& g, unsigned cyclotomic_index,
                               std::span<const Vertex> u_set = {});

/// Sorted eigenvalues of A(g) in floating point.
std::vector<double> numeric_spectrum(const Graph& g);

struct NumericCount {
  std::size_t count = 0;
  /// An eigenvalue sits between the counting tolerance and the guard gap.
  bool ambiguous = false;
};

/// Eigenvalues within `tolerance` of value; flags values in (tolerance, guard).
NumericCount numeric_count(std::span<const double> spectrum, double value, double tolerance = 1e-8,
                           double guard = 1e-6);

}  // namespace lineopt
