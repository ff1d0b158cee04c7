#include <doctest.h>

#include "etascan/bounds.hpp"
#include "oracles.hpp"

using namespace etascan;

namespace {

// Zeros of a_15 in closed form.
ZeroData r15_closed_form(std::uint64_t limit) {
  ZeroData d{15, limit, {}};
  for (std::uint64_t l = 0; 53 + 429 * l * (l + 1) / 2 <= limit; ++l) d.zeros.push_back(53 + 429 * l * (l + 1) / 2);
  return d;
}

}  // namespace

TEST_CASE("zero counts") {
  const auto d = ZeroData::from_exact(15, 600);
  CHECK(d.zeros == std::vector<std::uint64_t>{53, 482});
  CHECK(zero_count(d, 52) == 0);
  CHECK(zero_count(d, 500) == 2);
  CHECK_THROWS_AS(zero_count(d, 601), BoundsError);

  ScanJob job;
  job.r = 7;
  job.n_max = 28016;
  CHECK(zero_count(ZeroData::from_scan(scan_zeros(job)), 28016) == 0);
}

TEST_CASE("square roots floor") {
  for (long n : {0L, 1L, 2L, 3L, 1000L, 96183L}) {
    const Rational q(Int(n), Int(7));
    const Rational s = sqrt_floor(q);
    CHECK(s * s <= q);
    const Rational up = s + Rational(Int(1), Int(Int(1) << 64));
    CHECK(up * up > q);
  }
  CHECK(sqrt_floor(Rational(Int(49), Int(4))) == Rational(Int(7), Int(2)));
}

TEST_CASE("chain lower bounds") {
  CHECK(chain_count_lower_bound(5, 1000) <= 0);
  CHECK(chain_count_lower_bound(15, 96183) > sqrt_floor(Rational(96183)) / 15);
  CHECK(chain_count_lower_bound(7, 10'000'000'000ULL) > Rational(Int(100000), Int(505)));
  CHECK_THROWS_AS(chain_count_lower_bound(9, 10), BoundsError);
  // the r = 15 bound never exceeds the true count
  const auto d = r15_closed_form(2'000'000);
  for (std::uint64_t X = 1; X <= 2'000'000; X += 997) CHECK(chain_count_lower_bound(15, X) <= Rational(from_u64(zero_count(d, X))));
}

TEST_CASE("vanishing bound") {
  const auto d = r15_closed_form(1'000'000);
  const auto at = cs_bound_check(d, 96183);
  CHECK(at.zero_count == 21);
  CHECK(at.threshold_met);
  CHECK(at.satisfied);
  const auto big = cs_bound_check(d, 1'000'000);
  CHECK(big.zero_count == 68);
  CHECK(big.satisfied);
  const auto small = cs_bound_check(d, 52);
  CHECK(small.zero_count == 0);
  CHECK_FALSE(small.threshold_met);
  CHECK_FALSE(small.satisfied);
  CHECK(small.zero_count + small.nonzero_count == 53);

  const auto five = cs_bound_check(ZeroData::from_exact(5, 20000), 20000);
  CHECK(five.zero_count == 26);
  CHECK_FALSE(five.threshold_met);
  CHECK(five.bound_value > 0);
  ZeroData sparse5{5, 1'000'000, {1560}};  // too few zeros for the chain bound
  CHECK_THROWS_AS(cs_bound_check(sparse5, 1'000'000), BoundsError);

  ZeroData wrong{15, 1000, {}};  // missing chain zeros contradict the chain bound
  CHECK_THROWS_AS(cs_bound_check(wrong, 1000), BoundsError);
  ZeroData r9{9, 10, {}};
  CHECK_THROWS_AS(cs_bound_check(r9, 10), BoundsError);
}

TEST_CASE("non-vanishing bounds") {
  const auto d = r15_closed_form(1'000'000);
  const auto at = ono_bound_check(d, 25214);
  CHECK(at.linear.zero_count == 11);
  CHECK(at.linear.satisfied);
  CHECK(at.refined.threshold_met);
  CHECK(at.refined.satisfied);
  CHECK(at.linear.ratio >= Rational(Int(52), Int(53)));
  const auto below = ono_bound_check(d, 25213);
  CHECK_FALSE(below.refined.threshold_met);

  ZeroData r7{7, 100000, {28017}};
  const auto seven = ono_bound_check(r7, 100000);
  CHECK(seven.linear.nonzero_count == 100000);
  CHECK(seven.linear.ratio >= Rational(Int(84047), Int(84051)));
  CHECK(seven.linear.satisfied);
  CHECK(seven.refined.satisfied);

  // a synthetic dense zero set breaks both statements
  ZeroData many{15, 100000, {}};
  for (std::uint64_t n = 0; n < 5000; ++n) many.zeros.push_back(n * 20);
  const auto broken = ono_bound_check(many, 100000);
  CHECK_FALSE(broken.linear.comparison);
  CHECK_FALSE(broken.refined.comparison);
}

TEST_CASE("lacunarity densities") {
  const std::vector<std::uint64_t> grid{10000};
  // the decay for r = 2 is slow: about 0.48 at 10^3 and 0.40 at 10^4
  const auto exact2 = oracle::eta_product(2, 10001);
  std::uint64_t nonzero2 = 0;
  for (const auto& c : exact2) nonzero2 += c != 0;
  const std::vector<std::uint64_t> grid2{1000, 10000};
  const auto r2 = lacunarity_density(ZeroData::from_exact(2, 10000), grid2);
  CHECK(r2[1].nonzero == nonzero2);
  CHECK(r2[1].density == Rational(from_u64(nonzero2), Int(10001)));
  CHECK(r2[1].density < r2[0].density);
  CHECK(r2[1].density < Rational(Int(1), Int(2)));
  const auto r1 = lacunarity_density(ZeroData::from_exact(1, 10000), grid);
  CHECK(r1[0].nonzero <= 164);
  const auto r12 = lacunarity_density(ZeroData::from_exact(12, 10000), grid);
  CHECK(r12[0].density == 1);
}
