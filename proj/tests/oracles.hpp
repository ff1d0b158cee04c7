#pragma once

// Independent reference computations used by the tests. These deliberately
// take the slow, obvious route.

#include <cstdint>
#include <vector>

#include "etascan/bigint.hpp"

namespace oracle {

using etascan::Int;

// prod_{n>=1} (1 - q^n)^r truncated to `precision` terms, by multiplying in
// one binomial factor (1 - q^n) at a time.
inline std::vector<Int> eta_product(unsigned r, std::size_t precision) {
  std::vector<Int> c(precision, Int(0));
  if (precision == 0) return c;
  c[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) {
    for (unsigned k = 0; k < r; ++k) {
      for (std::size_t i = precision - 1; i >= n; --i) c[i] -= c[i - n];
    }
  }
  return c;
}

// Plain Cauchy product.
inline std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t precision) {
  std::vector<Int> c(precision, Int(0));
  for (std::size_t i = 0; i < a.size() && i < precision; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < precision; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Int sigma(std::uint64_t n, unsigned k) {
  Int s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Int p;
      mpz_ui_pow_ui(p.get_mpz_t(), d, k);
      s += p;
    }
  }
  return s;
}

// Ramanujan tau(1..10).
inline const std::vector<long> kTau{0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                     static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  unsigned __int128 acc = 1, base = r;
  for (std::uint64_t e = (p - 1) / 2; e; e >>= 1) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
  }
  return acc == 1 ? 1 : -1;
}

// Kronecker symbol from the definition: factor n and multiply the prime
// symbols, with (a/2) from a mod 8, (a/-1) from the sign of a, (a/0) = [a = +-1].
inline int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  std::uint64_t m = static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= m || m > 1; ++p) {
    if (p * p > m) p = m;
    while (m % p == 0) {
      m /= p;
      if (p == 2) {
        if (a % 2 == 0) return 0;
        const std::int64_t r8 = ((a % 8) + 8) % 8;
        result *= (r8 == 1 || r8 == 7) ? 1 : -1;
      } else {
        result *= legendre(a, p);
      }
    }
  }
  return result;
}

}  // namespace oracle
