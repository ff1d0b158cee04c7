#include "etascan/crt.hpp"

#include <stdexcept>
#include <vector>

#include "etascan/modarith.hpp"

namespace etascan {

Int modulus_product(std::span<const std::uint64_t> primes) {
  Int m = 1;
  for (u64 p : primes) m *= from_u64(p);
  return m;
}

Int crt_reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> primes) {
  if (residues.size() != primes.size()) throw std::invalid_argument("crt_reconstruct: size mismatch");
  // mixed-radix digits: x = d0 + d1 p0 + d2 p0 p1 + ...
  std::vector<u64> digits(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const u64 p = primes[i];
    u64 v = residues[i] % p;
    u64 radix = 1 % p;
    u64 acc = 0;
    for (std::size_t j = 0; j < i; ++j) {
      acc = add_mod(acc, mul_mod(digits[j] % p, radix, p), p);
      radix = mul_mod(radix, primes[j] % p, p);
    }
    digits[i] = mul_mod(sub_mod(v, acc, p), inv_mod(radix, p), p);
  }
  Int x = 0;
  Int radix = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    x += from_u64(digits[i]) * radix;
    radix *= from_u64(primes[i]);
  }
  if (2 * x > radix) x -= radix;
  return x;
}

}  // namespace etascan
