#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "lineopt/poly.hpp"

namespace lineopt {

/// Q(theta) for theta a root of a monic irreducible integer polynomial.
/// Elements are residues modulo that polynomial with rational coefficients.
class NumberField {
 public:
  using Element = std::vector<mpq_class>;  // length degree(), ascending powers of theta

  explicit NumberField(IntPoly modulus);

  std::size_t degree() const { return degree_; }
  const IntPoly& modulus() const { return modulus_; }

  Element zero() const { return Element(degree_, 0); }
  Element from_integer(long v) const;
  /// The generator theta itself.
  Element generator() const;

  static bool is_zero(const Element& a);
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  /// Throws std::domain_error on zero.
  Element inverse(const Element& a) const;

 private:
  Element reduce(std::vector<mpq_class> wide) const;

  IntPoly modulus_;
  std::size_t degree_;
};

/// Nullity of a dense matrix over the field by Gaussian elimination.
std::size_t nullity(const NumberField& field, std::vector<std::vector<NumberField::Element>> rows,
                    std::size_t columns);

}  // namespace lineopt
