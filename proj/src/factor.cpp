#include "etascan/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "etascan/modarith.hpp"

namespace etascan {
namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  std::map<u64, int> acc;
  for (u64 p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  split(n, acc);
  Factorization f;
  for (auto [p, e] : acc) f.push_back({p, e});
  return f;
}

std::uint64_t squarefree_part(std::uint64_t n) {
  std::uint64_t s = 1;
  for (auto [p, e] : factorize(n)) {
    if (e % 2) s *= p;
  }
  return s;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace etascan
