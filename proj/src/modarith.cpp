#include "etascan/modarith.hpp"

#include <algorithm>
#include <stdexcept>

namespace etascan {

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : small) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
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

std::vector<u64> primes_below(u64 bound, std::size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  u64 c = bound - 1;
  while (out.size() < count && c >= 2) {
    if (is_prime_u64(c)) out.push_back(c);
    --c;
  }
  return out;
}

const std::vector<u64>& default_basket() {
  static const std::vector<u64> basket = primes_below(u64{1} << 61, 8);
  return basket;
}

PrimeStream::PrimeStream(std::vector<u64> basket) : basket_(std::move(basket)) {
  if (basket_.empty()) throw std::invalid_argument("PrimeStream: empty basket");
  cursor_ = *std::min_element(basket_.begin(), basket_.end());
}

u64 PrimeStream::next() {
  if (emitted_ < basket_.size()) return basket_[emitted_++];
  // continue downward; skip anything already in the basket
  for (;;) {
    if (cursor_ <= 5) throw std::runtime_error("PrimeStream: exhausted");
    --cursor_;
    if (!is_prime_u64(cursor_)) continue;
    if (std::find(basket_.begin(), basket_.end(), cursor_) != basket_.end()) continue;
    ++emitted_;
    return cursor_;
  }
}

}  // namespace etascan
