#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace etascan {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Moduli are odd primes below 2^62 so that two residues fit a signed 64-bit
// sum and the split-accumulator kernels have 2 bits of headroom.
inline constexpr u64 kMaxModulus = u64{1} << 62;

inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 reduce_signed(i128 v, u64 p) {
  i128 r = v % static_cast<i128>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<i128>(p) : r);
}

inline u64 reduce_signed(i64 v, u64 p) { return reduce_signed(static_cast<i128>(v), p); }

// Symmetric representative in (-p/2, p/2].
inline i64 centered(u64 v, u64 p) {
  return v > p / 2 ? -static_cast<i64>(p - v) : static_cast<i64>(v);
}

u64 pow_mod(u64 base, u64 exp, u64 p);
u64 inv_mod(u64 a, u64 p);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n);

// The `count` largest primes strictly below `bound`, descending.
std::vector<u64> primes_below(u64 bound, std::size_t count);

// The 8 largest primes below 2^61.
const std::vector<u64>& default_basket();

/// Stream of distinct primes: first the given basket in order, then primes
/// descending from just below the smallest basket member. Used to top up a
/// basket when a CRT certificate needs more bits than the basket carries.
class PrimeStream {
 public:
  explicit PrimeStream(std::vector<u64> basket);

  u64 next();
  std::size_t emitted() const { return emitted_; }

 private:
  std::vector<u64> basket_;
  std::size_t emitted_ = 0;
  u64 cursor_ = 0;
};

}  // namespace etascan
