#include "etascan/bounds.hpp"

#include <algorithm>

namespace etascan {

namespace {

constexpr std::uint64_t kProvedUpTo = 10'000'000'000ULL;

struct CsConstants {
  unsigned r;
  std::uint64_t inv_c;      // bound is X^(1/2) / inv_c
  std::uint64_t threshold;  // valid for X >= threshold
};

constexpr CsConstants kCs[] = {{5, 119, 790377629ULL}, {7, 505, 10'000'000'000ULL}, {15, 15, 96183ULL}};

struct OnoConstants {
  unsigned r;
  long num, den;              // linear ratio
  std::uint64_t inv_c;        // refined: X - X^(1/2) / inv_c
  std::uint64_t refined_from;
};

constexpr OnoConstants kOno[] = {{7, 84047, 84051, 125, 27699}, {15, 52, 53, 14, 25214}};

void require_coverage(const ZeroData& data, std::uint64_t X) {
  if (X > data.limit) {
    throw BoundsError("zero data for r = " + std::to_string(data.r) + " covers 0.." + std::to_string(data.limit) +
                      ", not " + std::to_string(X));
  }
}

CountReport base_report(const ZeroData& data, std::uint64_t X) {
  if (X == 0) throw BoundsError("bounds need X >= 1");
  CountReport rep;
  rep.r = data.r;
  rep.X = X;
  rep.zero_count = zero_count(data, X);
  rep.nonzero_count = X + 1 - rep.zero_count;
  rep.ratio = Rational(from_u64(rep.nonzero_count), from_u64(X));
  rep.ratio.canonicalize();
  return rep;
}

}  // namespace

ZeroData ZeroData::from_scan(const ScanResult& scan) {
  if (scan.uncertified() != 0) {
    throw BoundsError("scan for r = " + std::to_string(scan.r) + " has " + std::to_string(scan.uncertified()) +
                      " unsettled candidates");
  }
  return {scan.r, scan.n_max, scan.certified_zeros()};
}

ZeroData ZeroData::from_exact(unsigned r, std::uint64_t limit) {
  const auto series = eta_power(r, limit + 1, Ring::exact());
  ZeroData d{r, limit, {}};
  for (auto n : series.zero_indices()) d.zeros.push_back(n);
  return d;
}

std::uint64_t zero_count(const ZeroData& data, std::uint64_t X) {
  require_coverage(data, X);
  return std::upper_bound(data.zeros.begin(), data.zeros.end(), X) - data.zeros.begin();
}

Rational sqrt_floor(const Rational& q) {
  if (q < 0) throw BoundsError("sqrt_floor of a negative number");
  const Int scaled = (q.get_num() * q.get_den()) << 128;
  Rational out(isqrt(scaled), Int(q.get_den()) << 64);
  out.canonicalize();
  return out;
}

Rational chain_count_lower_bound(unsigned r, std::uint64_t X) {
  if (X == 0) throw BoundsError("chain bound needs X >= 1");
  const Int x = from_u64(X);
  switch (r) {
    case 5: return sqrt_floor(Rational(24 * x + 5, 37445)) / 3 - 1;
    case 7: return sqrt_floor(Rational(24 * x + 7, 672415)) / 3 - 1;
    case 15: return sqrt_floor(Rational(16 * x + 10, 3432)) - Rational(1, 2);
    default: throw BoundsError("no chain bound for r = " + std::to_string(r));
  }
}

CountReport cs_bound_check(const ZeroData& data, std::uint64_t X) {
  const auto it = std::find_if(std::begin(kCs), std::end(kCs), [&](const CsConstants& c) { return c.r == data.r; });
  if (it == std::end(kCs)) throw BoundsError("no vanishing bound for r = " + std::to_string(data.r));
  CountReport rep = base_report(data, X);
  rep.bound_name = "zeros > X^(1/2)/" + std::to_string(it->inv_c);
  rep.bound_value = sqrt_floor(Rational(from_u64(X))) / from_u64(it->inv_c);
  const Int scaled = from_u64(rep.zero_count) * from_u64(it->inv_c);
  rep.comparison = scaled * scaled > from_u64(X);
  rep.threshold_met = X >= it->threshold;
  rep.satisfied = rep.threshold_met && rep.comparison;

  if (chain_count_lower_bound(data.r, X) > Rational(from_u64(rep.zero_count))) {
    throw BoundsError("chain lower bound exceeds the zero count for r = " + std::to_string(data.r) +
                      " at X = " + std::to_string(X));
  }
  return rep;
}

OnoReport ono_bound_check(const ZeroData& data, std::uint64_t X) {
  const auto it = std::find_if(std::begin(kOno), std::end(kOno), [&](const OnoConstants& c) { return c.r == data.r; });
  if (it == std::end(kOno)) throw BoundsError("no non-vanishing bound for r = " + std::to_string(data.r));
  OnoReport out;

  CountReport& lin = out.linear;
  lin = base_report(data, X);
  lin.bound_name = "nonzero >= " + std::to_string(it->num) + "/" + std::to_string(it->den) + " X";
  lin.bound_value = Rational(it->num, it->den);
  lin.comparison = lin.ratio >= lin.bound_value;
  lin.threshold_met = X <= kProvedUpTo;
  lin.satisfied = lin.threshold_met && lin.comparison;

  CountReport& ref = out.refined;
  ref = base_report(data, X);
  ref.bound_name = "nonzero > (1 - 1/(" + std::to_string(it->inv_c) + " X^(1/2))) X";
  ref.bound_value = Rational(from_u64(X)) - sqrt_floor(Rational(from_u64(X))) / from_u64(it->inv_c);
  // X - nonzero < X^(1/2) / c'  <=>  (c' (X - nonzero))^2 < X when the left side is nonnegative.
  const Int deficit = from_u64(X) - from_u64(ref.nonzero_count);
  const Int scaled = deficit * from_u64(it->inv_c);
  ref.comparison = deficit < 0 || scaled * scaled < from_u64(X);
  ref.threshold_met = X >= it->refined_from && X <= kProvedUpTo;
  ref.satisfied = ref.threshold_met && ref.comparison;
  return out;
}

std::vector<DensityPoint> lacunarity_density(const ZeroData& data, std::span<const std::uint64_t> grid) {
  std::vector<DensityPoint> out;
  for (auto N : grid) {
    DensityPoint p;
    p.N = N;
    p.nonzero = N + 1 - zero_count(data, N);
    p.density = Rational(from_u64(p.nonzero), from_u64(N + 1));
    p.density.canonicalize();
    out.push_back(p);
  }
  return out;
}

}  // namespace etascan
