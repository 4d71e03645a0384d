#include "lineopt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include <Eigen/Dense>

#include "lineopt/number_field.hpp"
#include "modular.hpp"

namespace lineopt {

using detail::u64;

AlgebraicEigenvalue::AlgebraicEigenvalue(unsigned a, unsigned b) : a_(a), b_(b) {
  if (a < 1 || a >= b || std::gcd(a, b) != 1) {
    throw Error(ErrorCode::NonCanonical,
                "2cos(" + std::to_string(a) + "pi/" + std::to_string(b) + ") is not in lowest terms with 1 <= a < b");
  }
}

double AlgebraicEigenvalue::value() const { return 2.0 * std::cos(M_PI * a_ / static_cast<double>(b_)); }

unsigned AlgebraicEigenvalue::min_poly_degree() const { return euler_phi(cyclotomic_index()) / 2; }

std::string AlgebraicEigenvalue::to_string() const { return std::to_string(a_) + "/" + std::to_string(b_); }

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Characteristic polynomial modulo p of a 0/1 adjacency matrix, via
// similarity reduction to upper Hessenberg form.
std::vector<u64> char_poly_mod(const Graph& g, u64 p) {
  using namespace detail;
  const std::size_t n = g.order();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n, 0));
  for (const auto& e : g.edges()) h[e.u][e.v] = h[e.v][e.u] = 1;

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][j + 1]);
    }
    const u64 inv = inv_mod(h[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const u64 u = mul_mod(h[r][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) {
        if (h[j + 1][c]) h[r][c] = sub_mod(h[r][c], mul_mod(u, h[j + 1][c], p), p);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (h[c][r]) h[c][j + 1] = add_mod(h[c][j + 1], mul_mod(u, h[c][r], p), p);
      }
    }
  }

  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 diag = h[m - 1][m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = add_mod(cur[k + 1], prev[k], p);
      cur[k] = sub_mod(cur[k], mul_mod(diag, prev[k], p), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, h[m - i][m - i - 1], p);
      if (t == 0) break;
      const u64 coef = mul_mod(t, h[m - i - 1][m - 1], p);
      if (coef == 0) continue;
      const auto& older = polys[m - i - 1];
      for (std::size_t k = 0; k < older.size(); ++k) cur[k] = sub_mod(cur[k], mul_mod(coef, older[k], p), p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

std::size_t bits_needed(const Graph& g) {
  // Every coefficient is bounded by sum_k C(n,k) Delta^k = (Delta + 1)^n.
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), g.max_degree() + 1, g.order());
  return mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
}

}  // namespace

IntPoly char_poly(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return IntPoly{1};
  const std::size_t count = (bits_needed(g) + 60) / 61;
  const auto primes = detail::large_primes(count);
  std::vector<mpz_class> value(n + 1, 0);
  mpz_class modulus = 1;
  for (u64 p : primes) {
    const auto residues = char_poly_mod(g, p);
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class inv;
    mpz_class mod_p = modulus % pz;
    mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_class r(static_cast<unsigned long>(residues[k]));
      mpz_class t = (r - value[k]) % pz;
      if (t < 0) t += pz;
      t = t * inv % pz;
      value[k] += modulus * t;
    }
    modulus *= pz;
  }
  const mpz_class half = modulus / 2;
  for (auto& c : value)
    if (c > half) c -= modulus;
  return IntPoly(std::move(value));
}

IntPoly char_poly_berkowitz(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return IntPoly{1};
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;

  std::vector<mpz_class> q{1};  // descending coefficients
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;  // new row/column index
    std::vector<mpz_class> col(r + 1, 0);
    col[0] = 1;
    col[1] = -a[k][k];
    std::vector<mpz_class> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = a[i][k];
    for (std::size_t power = 0; power + 2 <= r; ++power) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (a[k][i]) dot += w[i];
      col[power + 2] = -dot;
      std::vector<mpz_class> next(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (a[i][j]) next[i] += w[j];
      w = std::move(next);
    }
    std::vector<mpz_class> nq(r + 1, 0);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < q.size() && j <= i; ++j) nq[i] += col[i - j] * q[j];
    q = std::move(nq);
  }
  std::reverse(q.begin(), q.end());
  return IntPoly(std::move(q));
}

namespace {

std::shared_mutex cache_mutex;
std::map<unsigned, IntPoly> cyclotomic_cache;
std::map<unsigned, IntPoly> trig_cache;
std::map<std::size_t, std::vector<unsigned>> index_cache;

template <class Map, class Key>
const typename Map::mapped_type* cache_find(const Map& m, const Key& k) {
  std::shared_lock lock(cache_mutex);
  auto it = m.find(k);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

IntPoly cyclotomic(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "cyclotomic(0)");
  if (const auto* hit = cache_find(cyclotomic_cache, n)) return *hit;
  IntPoly result = IntPoly::monomial(1, n) - IntPoly{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) result = *divide_exact(result, cyclotomic(d));
  }
  std::unique_lock lock(cache_mutex);
  return cyclotomic_cache.emplace(n, std::move(result)).first->second;
}

IntPoly trig_min_poly_for_index(unsigned n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "trig minimal polynomial needs index >= 3");
  if (const auto* hit = cache_find(trig_cache, n)) return *hit;
  const IntPoly phi = cyclotomic(n);
  const auto d = static_cast<std::size_t>(phi.degree() / 2);
  // x^k + x^-k as a polynomial in y = x + 1/x.
  const IntPoly y{0, 1};
  IntPoly before = IntPoly{2};
  IntPoly current = y;
  IntPoly psi = IntPoly::constant(phi.coeff(d));
  for (std::size_t k = 1; k <= d; ++k) {
    psi = psi + phi.coeff(d + k) * current;
    IntPoly next = y * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  std::unique_lock lock(cache_mutex);
  return trig_cache.emplace(n, std::move(psi)).first->second;
}

IntPoly trig_min_poly(const AlgebraicEigenvalue& lambda) { return trig_min_poly_for_index(lambda.cyclotomic_index()); }

std::vector<unsigned> trig_indices(std::size_t max_degree) {
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = index_cache.find(max_degree); it != index_cache.end()) return it->second;
  }
  // phi(n) >= sqrt(n / 2), so phi(n) <= 2D forces n <= 2 (2D)^2.
  const std::size_t limit = 2 * (2 * max_degree) * (2 * max_degree) + 2;
  std::vector<unsigned> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), 0u);
  for (std::size_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (std::size_t m = p; m <= limit; m += p) phi[m] -= phi[m] / static_cast<unsigned>(p);
  }
  std::vector<unsigned> out;
  for (std::size_t n = 3; n <= limit; ++n)
    if (phi[n] / 2 <= max_degree) out.push_back(static_cast<unsigned>(n));
  std::unique_lock lock(cache_mutex);
  index_cache.emplace(max_degree, out);
  return out;
}

std::vector<AlgebraicEigenvalue> trig_candidates(std::size_t max_degree) {
  std::vector<AlgebraicEigenvalue> out;
  for (unsigned n : trig_indices(max_degree)) {
    if (n % 2 == 1) {
      for (unsigned a = 2; a < n; a += 2)
        if (std::gcd(a, n) == 1) out.emplace_back(a, n);
    } else {
      const unsigned b = n / 2;
      for (unsigned a = 1; a < b; a += 2)
        if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned multiplicity(const IntPoly& char_polynomial, const AlgebraicEigenvalue& lambda) {
  return multiplicity_for_index(char_polynomial, lambda.cyclotomic_index());
}

unsigned multiplicity(const Graph& g, const AlgebraicEigenvalue& lambda) {
  return multiplicity(char_poly(g), lambda);
}

std::vector<EigClass> eig_classes(const IntPoly& char_polynomial) {
  std::vector<EigClass> out;
  for (auto& f : squarefree_decomposition(char_polynomial)) out.push_back({std::move(f.factor), f.multiplicity});
  return out;
}

std::vector<EigClass> eig_classes(const Graph& g) { return eig_classes(char_poly(g)); }

namespace {

struct RootOfPsi {
  u64 prime;
  u64 root;
};

// A prime p = 1 (mod n) and the image of zeta_n + 1/zeta_n in F_p.
RootOfPsi modular_root(unsigned n) {
  using namespace detail;
  static std::mutex mu;
  static std::map<unsigned, RootOfPsi> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const u64 p = prime_one_mod(n);
  std::vector<unsigned> prime_factors;
  for (unsigned m = n, q = 2; m > 1; ++q) {
    if (q * q > m) q = m;
    if (m % q == 0) {
      prime_factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  u64 omega = 0;
  for (u64 h = 2;; ++h) {
    omega = pow_mod(h, (p - 1) / n, p);
    bool primitive = omega != 0;
    for (unsigned q : prime_factors)
      if (pow_mod(omega, n / q, p) == 1) primitive = false;
    if (primitive) break;
  }
  RootOfPsi r{p, add_mod(omega, inv_mod(omega, p), p)};
  std::lock_guard lock(mu);
  cache.emplace(n, r);
  return r;
}

static_assert(sizeof(unsigned long) == sizeof(u64), "GMP word must hold a 62-bit prime");

u64 residue(const mpz_class& c, u64 p) { return mpz_fdiv_ui(c.get_mpz_t(), p); }

u64 evaluate_mod(const IntPoly& f, u64 x, u64 p) {
  using namespace detail;
  u64 acc = 0;
  const auto& coeffs = f.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add_mod(mul_mod(acc, x, p), residue(*it, p), p);
  return acc;
}

std::size_t rank_mod(std::vector<std::vector<u64>> m, std::size_t columns, u64 p) {
  using namespace detail;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const u64 inv = inv_mod(m[rank][col], p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const u64 f = mul_mod(m[r][col], inv, p);
      for (std::size_t c = col; c < columns; ++c)
        if (m[rank][c]) m[r][c] = sub_mod(m[r][c], mul_mod(f, m[rank][c], p), p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

unsigned multiplicity_for_index(const IntPoly& char_polynomial, unsigned cyclotomic_index) {
  const auto [p, root] = modular_root(cyclotomic_index);
  if (evaluate_mod(char_polynomial, root, p) != 0) return 0;
  return divisibility_order(char_polynomial, trig_min_poly_for_index(cyclotomic_index));
}

std::size_t nullity_over_field(const Graph& g, unsigned cyclotomic_index, std::span<const Vertex> u_set) {
  const std::size_t n = g.order();
  std::vector<bool> zeroed(n, false);
  for (Vertex u : u_set) {
    if (u >= n) throw Error(ErrorCode::InvalidVertex, "annihilator set");
    zeroed[u] = true;
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v)
    if (!zeroed[v]) kept.push_back(v);
  if (kept.empty()) return 0;

  // Reducing at a prime ideal can only lose rank, so full column rank mod p
  // certifies a trivial kernel over Q(lambda).
  const IntPoly psi = trig_min_poly_for_index(cyclotomic_index);
  const auto [p, root] = modular_root(cyclotomic_index);
  {
    using namespace detail;
    if (evaluate_mod(psi, root, p) == 0) {
      std::vector<std::vector<u64>> m(n, std::vector<u64>(kept.size(), 0));
      for (std::size_t c = 0; c < kept.size(); ++c) {
        const Vertex v = kept[c];
        for (Vertex w : g.neighbors(v)) m[w][c] = 1;
        m[v][c] = sub_mod(0, root, p);
      }
      if (rank_mod(std::move(m), kept.size(), p) == kept.size()) return 0;
    }
  }

  NumberField field(psi);
  const auto minus_lambda = field.sub(field.zero(), field.generator());
  const auto one = field.from_integer(1);
  std::vector<std::vector<NumberField::Element>> rows(n, std::vector<NumberField::Element>(kept.size(), field.zero()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const Vertex v = kept[c];
    for (Vertex w : g.neighbors(v)) rows[w][c] = one;
    rows[v][c] = minus_lambda;
  }
  return nullity(field, std::move(rows), kept.size());
}

std::size_t annihilator_dimension(const Graph& g, const AlgebraicEigenvalue& lambda,
                                  std::span<const Vertex> u_set) {
  return nullity_over_field(g, lambda.cyclotomic_index(), u_set);
}

std::vector<double> numeric_spectrum(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

NumericCount numeric_count(std::span<const double> spectrum, double value, double tolerance, double guard) {
  NumericCount c;
  for (double e : spectrum) {
    const double gap = std::abs(e - value);
    if (gap <= tolerance) {
      ++c.count;
    } else if (gap < guard) {
      c.ambiguous = true;
    }
  }
  return c;
}

}  // namespace lineopt
