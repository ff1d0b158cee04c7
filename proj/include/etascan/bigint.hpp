#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace etascan {

using Int = mpz_class;
using Rational = mpq_class;

inline std::string to_dec(const Int& v) { return v.get_str(10); }
Int from_dec(const std::string& s);

// "num/den" in lowest terms; integers still carry "/1".
std::string to_fraction_string(const Rational& q);
Rational from_fraction_string(const std::string& s);

Int isqrt(const Int& v);
bool is_perfect_square(const Int& v);

// floor(log2 |v|) + 1, 0 for v = 0.
std::size_t bit_length(const Int& v);

Int from_i128(__int128 v);
Int from_u64(std::uint64_t v);
std::uint64_t to_u64(const Int& v);  // throws if out of range

// Reduce into [0, p).
std::uint64_t mod_u64(const Int& v, std::uint64_t p);

}  // namespace etascan
