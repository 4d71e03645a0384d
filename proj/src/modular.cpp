#include "modular.hpp"

#include <mutex>

namespace lineopt::detail {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard lock(mu);
  u64 candidate = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
  if (candidate % 2 == 0) --candidate;
  while (primes.size() < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count)};
}

u64 prime_one_mod(u64 n) {
  const u64 limit = (1ULL << 62) - 1;
  u64 p = limit / n * n + 1;
  if (p > limit) p -= n;
  while (!is_prime_u64(p)) p -= n;
  return p;
}

}  // namespace lineopt::detail
