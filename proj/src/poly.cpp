#include "lineopt/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lineopt {

IntPoly::IntPoly(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return IntPoly(std::move(v));
}

double IntPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  std::vector<mpz_class> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.coeffs_[i];
  return IntPoly(std::move(v));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(rem.size() - db, 0);
  const mpz_class& lead = bc.back();
  mpz_class t;
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      t = q[k] * bc[j];
      rem[k + j] -= t;
    }
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const mpz_class& lead = bc.back();
  mpz_class factor;
  for (int top = a.degree(); top >= db; --top) {
    factor = rem[static_cast<std::size_t>(top)];
    for (int i = 0; i <= top; ++i) rem[static_cast<std::size_t>(i)] *= lead;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(top - db + j)] -= factor * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

unsigned divisibility_order(IntPoly a, const IntPoly& b) {
  if (b.degree() < 1) throw std::domain_error("divisibility_order needs a nonconstant divisor");
  if (a.is_zero()) throw std::domain_error("divisibility_order of the zero polynomial");
  unsigned e = 0;
  while (auto q = divide_exact(a, b)) {
    a = std::move(*q);
    ++e;
  }
  return e;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f) {
  std::vector<SquarefreeFactor> out;
  if (f.degree() < 1) return out;
  const IntPoly p = f.primitive_part();
  const IntPoly dp = p.derivative();
  const IntPoly a0 = gcd(p, dp);
  IntPoly b = *divide_exact(p, a0);
  IntPoly c = *divide_exact(dp, a0);
  IntPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() >= 1; ++i) {
    IntPoly a = gcd(b, d);
    IntPoly nb = *divide_exact(b, a);
    IntPoly nc = *divide_exact(d, a);
    if (a.degree() >= 1) out.push_back({a, i});
    b = std::move(nb);
    d = nc - b.derivative();
  }
  return out;
}

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
  std::vector<mpz_class> v;
  for (const auto& c : j) {
    if (c.is_string()) {
      v.emplace_back(c.get<std::string>());
    } else {
      v.emplace_back(c.get<long>());
    }
  }
  return IntPoly(std::move(v));
}

}  // namespace lineopt
