#include <doctest.h>

#include <random>

#include "etascan/series.hpp"
#include "oracles.hpp"

using namespace etascan;

namespace {
const Ring Z = Ring::exact();

std::vector<Int> as_vec(const CoeffSeries& s) { return {s.exact().begin(), s.exact().end()}; }
}  // namespace

TEST_CASE("ring construction") {
  CHECK(Ring::exact().is_exact());
  CHECK(Ring::mod_prime(1000003).prime() == 1000003);
  CHECK_THROWS_AS(Ring::mod_prime(3), SeriesError);
  CHECK_THROWS_AS(Ring::mod_prime(1000001), SeriesError);
  CHECK_THROWS_AS(Ring::mod_prime((u64{1} << 62) + 135), SeriesError);
  CHECK(parse_eta_algorithm("binary-pow") == EtaAlgorithm::BinaryPow);
  CHECK(to_string(EtaAlgorithm::SigmaRecurrence) == "sigma-recurrence");
  CHECK_THROWS_AS(parse_eta_algorithm("fft"), SeriesError);
}

TEST_CASE("generators") {
  const auto e = euler_series(30, Z);
  CHECK(e.valuation_num() == 1);
  CHECK(as_vec(e) == oracle::eta_product(1, 30));
  const auto j = jacobi_series(30, Z);
  CHECK(j.valuation_num() == 3);
  CHECK(as_vec(j) == oracle::eta_product(3, 30));
  CHECK(j.coefficient(0) == 1);
  CHECK(j.coefficient(1) == -3);
  CHECK(j.coefficient(3) == 5);
  CHECK(j.coefficient(6) == -7);
  CHECK(e.coefficient(1) == -1);
  CHECK(e.coefficient(5) == 1);
  CHECK(e.coefficient(4) == 0);
}

TEST_CASE("Euler times Jacobi") {
  const auto p = multiply(euler_series(3, Z), jacobi_series(3, Z));
  CHECK(as_vec(p) == std::vector<Int>{1, -4, 2});
  CHECK(p.valuation_num() == 4);
}

TEST_CASE("euler cubed is jacobi") {
  const auto e = euler_series(2000, Z);
  CHECK(multiply(multiply(e, e), e) == jacobi_series(2000, Z));
}

TEST_CASE("all algorithms match the product oracle") {
  for (unsigned r = 1; r <= 26; ++r) {
    const auto expect = oracle::eta_product(r, 150);
    for (auto algo : {EtaAlgorithm::SparsePower, EtaAlgorithm::SigmaRecurrence, EtaAlgorithm::BinaryPow}) {
      const auto s = eta_power(r, 150, Z, algo);
      CHECK_MESSAGE(as_vec(s) == expect, "r = " << r << " algo " << to_string(algo));
      CHECK(s.valuation_num() == static_cast<long>(r));
    }
  }
}

TEST_CASE("Ramanujan tau") {
  const auto d = eta_power(24, 10, Z);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(d.coefficient(n - 1) == oracle::kTau[n]);
}

TEST_CASE("eta_power error cases") {
  CHECK_THROWS_AS(eta_power(0, 10, Z), SeriesError);
  CHECK_THROWS_AS(eta_power(5, 100, Ring::mod_prime(97), EtaAlgorithm::SigmaRecurrence), SeriesError);
  CHECK_THROWS_AS(eta_power(5, 0, Z), SeriesError);
}

TEST_CASE("multiplication strategies agree") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 50 + rng() % 400;
    std::vector<Int> a(n), b(n);
    for (auto& v : a) v = Int(static_cast<long>(rng() % 2001)) - 1000;
    for (std::size_t i = 0; i < n; i += 1 + rng() % 30) b[i] = (from_u64(rng()) << 64) - from_u64(rng());
    const CoeffSeries A(a), B(b);
    const auto ref = multiply(A, B, MultiplyStrategy::Schoolbook);
    CHECK(multiply(A, B, MultiplyStrategy::Sparse) == ref);
    CHECK(multiply(A, B, MultiplyStrategy::Kronecker) == ref);
    CHECK(multiply(A, B, MultiplyStrategy::Auto) == ref);
    const u64 p = default_basket()[trial];
    const auto rp = multiply(A.reduce(p), B.reduce(p), MultiplyStrategy::Schoolbook);
    CHECK(rp == ref.reduce(p));
    CHECK(multiply(A.reduce(p), B.reduce(p), MultiplyStrategy::Kronecker) == rp);
    CHECK(multiply(A.reduce(p), B.reduce(p), MultiplyStrategy::Sparse) == rp);
  }
}

TEST_CASE("reduction commutes with exact computation") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const unsigned r = 1 + rng() % 60;
    const u64 p = primes_below(5000 + rng() % (u64{1} << 60), 1).front();
    const auto exact = eta_power(r, 300, Z);
    CHECK(exact.reduce(p) == eta_power(r, 300, Ring::mod_prime(p)));
    CHECK(exact.reduce(p) == eta_power(r, 300, Ring::mod_prime(p), EtaAlgorithm::BinaryPow));
  }
}

TEST_CASE("series accessors") {
  const auto s = eta_power(5, 2000, Z);
  CHECK(s.precision() == 2000);
  const auto zeros = s.zero_indices();
  CHECK(zeros == std::vector<std::size_t>{1560, 1802, 1838});
  CHECK(s.nonzero_count() == 1997);
  CHECK(s.is_zero_at(1560));
  CHECK(s.truncate(100) == eta_power(5, 100, Z));
  CHECK_FALSE(s.truncate(100) == eta_power(5, 100, Ring::mod_prime(1000003)));
  CHECK(CoeffSeries::one(Z, 4).coefficient(0) == 1);
  CHECK(CoeffSeries::zero(Z, 4).nonzero_count() == 0);
  CHECK_THROWS(s.residues());
}

TEST_CASE("sigma_1 table") {
  const auto s = sigma1_table(200);
  for (std::uint64_t n = 1; n <= 200; ++n) CHECK(from_u64(s[n]) == oracle::sigma(n, 1));
}

TEST_CASE("point evaluation") {
  CHECK(point_coefficient(7, 28017) == 0);
  CHECK(point_coefficient(5, 1560) == 0);
  CHECK(point_coefficient(5, 1561) == -310);
  CHECK_FALSE(point_coefficient_supported(15));
  CHECK_FALSE(point_coefficient_supported(8));
  CHECK_THROWS(point_coefficient(15, 10));
  for (unsigned r : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 9u}) {
    REQUIRE(point_coefficient_supported(r));
    const auto s = eta_power(r, 800, Z);
    for (std::uint64_t n = 0; n < 800; n += 7) CHECK(point_coefficient(r, n) == s.coefficient(n));
  }
}

TEST_CASE("evaluation at selected indices") {
  std::mt19937_64 rng(17);
  const Ring R = Ring::mod_prime(default_basket()[1]);
  for (unsigned r : {1u, 2u, 5u, 7u, 12u, 15u, 26u, 40u}) {
    const auto full = eta_power(r, 3000, R);
    for (std::size_t count : {std::size_t{1}, std::size_t{5}, std::size_t{400}}) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < count; ++i) idx.push_back(rng() % 3000);
      const auto got = eta_power_at(r, idx, R);
      for (std::size_t i = 0; i < count; ++i) CHECK(got[i] == full.residues()[idx[i]]);
    }
  }
}
