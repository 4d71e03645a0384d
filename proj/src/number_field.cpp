#include "lineopt/number_field.hpp"

#include <stdexcept>

namespace lineopt {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, trailing zeros stripped

void strip(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// r = a mod b, q = a div b over Q[x]; b nonzero and stripped.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  strip(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const mpq_class& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    mpq_class f = r.back() / lead;
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
    r.pop_back();
    strip(r);
  }
  strip(q);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  strip(out);
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  strip(out);
  return out;
}

}  // namespace

NumberField::NumberField(IntPoly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || !modulus_.is_monic()) {
    throw std::invalid_argument("number field modulus must be monic of positive degree");
  }
  degree_ = static_cast<std::size_t>(modulus_.degree());
}

NumberField::Element NumberField::from_integer(long v) const {
  Element e = zero();
  e[0] = v;
  return e;
}

NumberField::Element NumberField::generator() const {
  std::vector<mpq_class> wide(2, 0);
  wide[1] = 1;
  return reduce(std::move(wide));
}

bool NumberField::is_zero(const Element& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

NumberField::Element NumberField::add(const Element& a, const Element& b) const {
  Element out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = a[i] + b[i];
  return out;
}

NumberField::Element NumberField::sub(const Element& a, const Element& b) const {
  Element out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = a[i] - b[i];
  return out;
}

NumberField::Element NumberField::reduce(std::vector<mpq_class> wide) const {
  const auto& m = modulus_.coefficients();
  // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
  for (std::size_t top = wide.size(); top-- > degree_;) {
    if (wide[top] == 0) continue;
    const mpq_class f = wide[top];
    const std::size_t shift = top - degree_;
    for (std::size_t j = 0; j < degree_; ++j) {
      if (m[j] != 0) wide[shift + j] -= f * mpq_class(m[j]);
    }
    wide[top] = 0;
  }
  wide.resize(degree_, 0);
  return wide;
}

NumberField::Element NumberField::mul(const Element& a, const Element& b) const {
  std::vector<mpq_class> wide(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j) {
      if (b[j] != 0) wide[i + j] += a[i] * b[j];
    }
  }
  return reduce(std::move(wide));
}

NumberField::Element NumberField::inverse(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in a number field");
  // Extended Euclid: s * a + t * m = g, g a nonzero constant since m is irreducible.
  QPoly r0(modulus_.coefficients().begin(), modulus_.coefficients().end());
  QPoly r1(a.begin(), a.end());
  strip(r1);
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw std::domain_error("number field modulus is reducible");
  }
  const mpq_class g = r1[0];
  for (auto& c : s1) c /= g;
  QPoly q, r;
  QPoly m(modulus_.coefficients().begin(), modulus_.coefficients().end());
  divmod(s1, m, q, r);
  r.resize(degree_, 0);
  return r;
}

std::size_t nullity(const NumberField& field, std::vector<std::vector<NumberField::Element>> rows,
                    std::size_t columns) {
  std::size_t rank = 0;
  auto is_rational = [](const NumberField::Element& e) {
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] != 0) return false;
    return true;
  };
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    // Prefer rational pivots; they keep entries small.
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (NumberField::is_zero(rows[r][col])) continue;
      if (pivot == rows.size()) pivot = r;
      if (is_rational(rows[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = field.inverse(rows[rank][col]);
    for (std::size_t c = col; c < columns; ++c) rows[rank][c] = field.mul(rows[rank][c], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (NumberField::is_zero(rows[r][col])) continue;
      const auto factor = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        if (NumberField::is_zero(rows[rank][c])) continue;
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return columns - rank;
}

}  // namespace lineopt
