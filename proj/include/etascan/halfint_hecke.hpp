#pragma once

// Hecke operators T(p^2) of half-integral weight lambda + 1/2 acting on
//
//   f_r(tau) = eta(24 tau)^r = sum_D b_r(D) q^D,   b_r(D) = a_r((D - r) / 24),
//
// via
//
//   T(p^2) b(D) = b(D p^2) + chi*(p) (D/p) p^(lambda-1) b(D) + chi*(p^2) p^(2 lambda - 1) b(D / p^2)
//
// with chi*(D) = ((-1)^lambda / D) chi(D) and b(x) = 0 off the integers.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etascan/bigint.hpp"

namespace etascan {

class HeckeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kronecker symbol over the full domain (any sign of a and n, n = 0 included).
int kronecker(const Int& a, const Int& n);
int kronecker(std::int64_t a, std::int64_t n);

int chi12(std::int64_t n);

struct HeckeHalfParams {
  unsigned lambda = 0;
  std::uint64_t level4N = 576;
  std::function<int(std::int64_t)> chi = chi12;
  std::string chi_name = "chi12";

  // lambda = (r - 1) / 2 on Gamma0(576) with chi12; r odd.
  static HeckeHalfParams for_eta24(unsigned r);
};

int chi_star(std::int64_t D, const HeckeHalfParams& params);

// Coefficients b(D) / den for D = 0..Dmax (b(0) is always 0 here).
struct DSeries {
  std::vector<Int> num;
  Int den = 1;
  std::optional<unsigned> origin;

  std::uint64_t dmax() const { return num.empty() ? 0 : num.size() - 1; }
  Rational coefficient(std::uint64_t D) const;
  bool is_zero() const;
  bool operator==(const DSeries& other) const;
};

DSeries eta24_dseries(unsigned r, std::uint64_t dmax);

// Output dmax is floor(f.dmax() / p^2); throws HeckeError if that is 0 or if
// p divides the level.
DSeries hecke_tp2(const DSeries& f, std::uint64_t p, const HeckeHalfParams& params);

struct EigenReport {
  unsigned r = 0;
  std::uint64_t p = 0;
  std::uint64_t dmax = 0;
  Rational eigenvalue;
  Rational max_residual;  // max |T(p^2) b(D) - eigenvalue * b(D)| over D <= dmax

  bool integral() const { return eigenvalue.get_den() == 1; }
};

/// Reads the eigenvalue off D = r (where b(r) = a_r(0) = 1) and checks the
/// eigen-relation at every D <= dmax. Throws HeckeError on a nonzero residual,
/// and on a non-integral eigenvalue when lambda >= 1. For r = 1 the factor
/// p^(lambda - 1) = 1/p makes the eigenvalue a rational with denominator p.
EigenReport eigen_check(unsigned r, std::uint64_t p, std::uint64_t dmax);
EigenReport eigen_check(const DSeries& f, unsigned r, std::uint64_t p, std::uint64_t dmax);

struct SquareClassEntry {
  std::uint64_t n = 0;      // multiplier, D = D0 n^2
  std::uint64_t index = 0;  // (D - r) / 24
  bool zero = false;
};

struct SquareClassReport {
  unsigned r = 0;
  std::uint64_t D0 = 0;
  std::vector<SquareClassEntry> entries;

  bool all_zero() const;
};

// Whether a_r(index) vanishes.
using ZeroOracle = std::function<bool(std::uint64_t index)>;

// Exact point evaluation for the supported r.
ZeroOracle point_zero_oracle(unsigned r);

/// b(D0 n^2) for 1 <= n <= n_bound with gcd(n, 6) = 1 (hence coprime to the
/// level). Throws HeckeError if D0 is not congruent to r mod 24 or any entry
/// is nonzero; the report is built first so the message lists the offenders.
SquareClassReport square_class_check(unsigned r, std::uint64_t D0, std::uint64_t n_bound, const ZeroOracle& is_zero);

}  // namespace etascan
