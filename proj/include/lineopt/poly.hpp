#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace lineopt {

/// Univariate polynomial over the integers, ascending coefficients with
/// trailing zeros stripped. The zero polynomial has no coefficients and
/// degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  static IntPoly constant(const mpz_class& c) { return monomial(c, 0); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  IntPoly derivative() const;
  mpz_class content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;
  IntPoly operator-() const;

  double evaluate(double x) const;
  mpz_class evaluate(const mpz_class& x) const;
  std::string to_string(char var = 'x') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Quotient q with a = q * b when b divides a in Z[x] (equivalently in Q[x]
/// for primitive b), nullopt otherwise. b must be nonzero.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Largest e with b^e | a; b must be nonconstant and a nonzero.
unsigned divisibility_order(IntPoly a, const IntPoly& b);

struct SquarefreeFactor {
  IntPoly factor;       // squarefree, primitive, positive leading coefficient
  unsigned multiplicity;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm over Z: f = unit * prod factor^multiplicity with pairwise
/// coprime squarefree factors. Constant factors are omitted.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f);

/// Coefficients as decimal strings, ascending degree.
nlohmann::json to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

}  // namespace lineopt
