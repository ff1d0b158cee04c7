#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace etascan {

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

// Trial division up to 10^6, then Pollard-rho (Brent) with deterministic
// Miller-Rabin on the cofactors. Sorted by prime.
Factorization factorize(std::uint64_t n);

// Product of the primes with odd exponent.
std::uint64_t squarefree_part(std::uint64_t n);

std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace etascan
