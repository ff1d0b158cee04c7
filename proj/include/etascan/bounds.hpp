#pragma once

// Counting functions over certified zero sets and checks of the published
// growth bounds for vanishing (r = 5, 7, 15) and non-vanishing (r = 7, 15)
// coefficients. Indices run over 0..X inclusive; all verdicts are exact.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "etascan/bigint.hpp"
#include "etascan/engine.hpp"

namespace etascan {

class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero indices of a_r on 0..limit.
struct ZeroData {
  unsigned r = 0;
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> zeros;  // ascending

  // Requires every record to be settled (certified or refuted).
  static ZeroData from_scan(const ScanResult& scan);
  // Direct exact expansion, for small limits.
  static ZeroData from_exact(unsigned r, std::uint64_t limit);
};

struct CountReport {
  unsigned r = 0;
  std::uint64_t X = 0;
  std::uint64_t zero_count = 0;
  std::uint64_t nonzero_count = 0;  // X + 1 - zero_count
  Rational ratio;                   // nonzero_count / X
  std::string bound_name;
  Rational bound_value;  // exact, or a rational approximation of an irrational bound
  bool comparison = false;     // the inequality itself
  bool threshold_met = false;  // X inside the range where the bound is proved
  bool satisfied = false;      // threshold_met && comparison
};

std::uint64_t zero_count(const ZeroData& data, std::uint64_t X);

// Chain-only lower bounds on the zero count for r in {5, 7, 15}. Square roots
// are floored at 64 fractional bits, so the result never exceeds the real value.
Rational chain_count_lower_bound(unsigned r, std::uint64_t X);

// Zero count > c X^(1/2) with c = 1/119, 1/505, 1/15 for r = 5, 7, 15, valid
// from X >= 790377629, 10^10, 96183 respectively. Also requires the chain
// bound not to exceed the zero count (BoundsError otherwise).
CountReport cs_bound_check(const ZeroData& data, std::uint64_t X);

struct OnoReport {
  CountReport linear;   // nonzero >= c X, c = 84047/84051 (r = 7), 52/53 (r = 15)
  CountReport refined;  // nonzero > (1 - 1/(c' X^(1/2))) X, c' = 125 (r = 7), 14 (r = 15)
};

// Both statements are proved for X <= 10^10; the refined one additionally
// from X >= 27699 (r = 7) and X >= 25214 (r = 15).
OnoReport ono_bound_check(const ZeroData& data, std::uint64_t X);

struct DensityPoint {
  std::uint64_t N = 0;
  std::uint64_t nonzero = 0;
  Rational density;  // nonzero / (N + 1)
};

std::vector<DensityPoint> lacunarity_density(const ZeroData& data, std::span<const std::uint64_t> grid);

// Rational r with r <= sqrt(q) < r + 2^-64.
Rational sqrt_floor(const Rational& q);

}  // namespace etascan
