#include <doctest.h>

#include <random>

#include "etascan/factor.hpp"
#include "etascan/halfint_hecke.hpp"
#include "etascan/series.hpp"
#include "oracles.hpp"

using namespace etascan;

TEST_CASE("kronecker symbol") {
  for (std::int64_t n = 1; n < 200; ++n) CHECK(kronecker(1, n) == 1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(2, 3) == -1);
  for (std::int64_t a = -60; a <= 60; ++a) {
    for (std::int64_t n = -60; n <= 60; ++n) CHECK_MESSAGE(kronecker(a, n) == oracle::kronecker(a, n), a << "/" << n);
  }
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 101ull}) {
    for (std::int64_t a = -300; a <= 300; ++a) CHECK(kronecker(a, static_cast<std::int64_t>(p)) == oracle::legendre(a, p));
  }
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 2000) - 1000, b = static_cast<std::int64_t>(rng() % 2000) - 1000;
    const std::int64_t n = static_cast<std::int64_t>(rng() % 999) + 1;
    CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
  }
  CHECK(kronecker(Int(-1), Int(5)) == 1);
  CHECK(kronecker(Int(-1), Int(7)) == -1);
}

TEST_CASE("chi12") {
  CHECK(chi12(11) == 1);
  CHECK(chi12(7) == -1);
  CHECK(chi12(6) == 0);
  CHECK(chi12(1) == 1);
  CHECK(chi12(5) == -1);
  for (std::int64_t n = -100; n < 100; ++n) CHECK(chi12(n) == chi12(n + 12));
  for (std::int64_t m = 1; m < 80; ++m)
    for (std::int64_t n = 1; n < 80; ++n)
      if (std::gcd(m * n, std::int64_t{12}) == 1) CHECK(chi12(m * n) == chi12(m) * chi12(n));
}

TEST_CASE("chi_star") {
  const auto p15 = HeckeHalfParams::for_eta24(15);
  CHECK(p15.lambda == 7);
  CHECK(p15.level4N == 576);
  CHECK(chi_star(5, p15) == kronecker(-1, 5) * chi12(5));
  for (std::int64_t D = 1; D < 200; ++D) {
    if (std::gcd(D, std::int64_t{576}) > 1) CHECK(chi_star(D, p15) == 0);
  }
  HeckeHalfParams trivial;
  trivial.lambda = 2;
  trivial.chi = [](std::int64_t n) { return std::gcd(n, std::int64_t{576}) == 1 ? 1 : 0; };
  for (std::int64_t D = 1; D < 200; ++D)
    if (std::gcd(D, std::int64_t{576}) == 1) CHECK(chi_star(D, trivial) == 1);
  CHECK_THROWS_AS(HeckeHalfParams::for_eta24(4), HeckeError);
}

TEST_CASE("D-series translation") {
  const auto f = eta24_dseries(5, 2000);
  const auto a = eta_power(5, 100, Ring::exact());
  for (std::uint64_t D = 1; D <= 2000; ++D) {
    if (D % 24 == 5) CHECK(f.coefficient(D) == a.coefficient((D - 5) / 24));
    else CHECK(f.coefficient(D) == 0);
  }
  // eta(24 tau) lives on the squares of integers prime to 6
  const auto g = eta24_dseries(1, 5000);
  for (std::uint64_t D = 1; D <= 5000; ++D) {
    const auto m = isqrt_u64(D);
    const bool square = m * m == D && std::gcd(m, std::uint64_t{6}) == 1;
    CHECK((g.num[D] != 0) == square);
    if (square) CHECK(g.coefficient(D) == chi12(static_cast<std::int64_t>(m)));
  }
}

TEST_CASE("T(p^2) is linear and plans precision backwards") {
  const auto params = HeckeHalfParams::for_eta24(7);
  DSeries zero;
  zero.num.assign(1000, Int(0));
  CHECK(hecke_tp2(zero, 5, params).is_zero());
  CHECK(hecke_tp2(zero, 5, params).dmax() == 999 / 25);

  const auto f = eta24_dseries(7, 5000);
  DSeries f3 = f;
  for (auto& c : f3.num) c *= 3;
  const auto t = hecke_tp2(f, 7, params);
  const auto t3 = hecke_tp2(f3, 7, params);
  for (std::uint64_t D = 1; D <= t.dmax(); ++D) CHECK(t3.coefficient(D) == 3 * t.coefficient(D));

  DSeries tiny;
  tiny.num.assign(20, Int(1));
  CHECK_THROWS_AS(hecke_tp2(tiny, 5, params), HeckeError);
  CHECK_THROWS_AS(hecke_tp2(f, 3, params), HeckeError);
}

TEST_CASE("T(p^2) and T(q^2) commute on arbitrary series") {
  std::mt19937_64 rng(8);
  for (unsigned lambda : {0u, 1u, 4u}) {
    HeckeHalfParams params;
    params.lambda = lambda;
    DSeries f;
    f.num.resize(25 * 49 * 11 + 1);
    for (auto& c : f.num) c = Int(static_cast<long>(rng() % 201)) - 100;
    const auto a = hecke_tp2(hecke_tp2(f, 5, params), 7, params);
    const auto b = hecke_tp2(hecke_tp2(f, 7, params), 5, params);
    CHECK(a.dmax() == 11);
    CHECK(a == b);
  }
}

TEST_CASE("eta(24 tau)^r is an eigenform") {
  // weight 1/2: b(p^2) = chi12(p) and the middle term adds chi12(p)/p
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    const auto rep = eigen_check(1, p, 500);
    const int c = chi12(static_cast<std::int64_t>(p));
    CHECK(rep.eigenvalue == Rational(c * static_cast<long>(p + 1), static_cast<long>(p)));
    CHECK(rep.max_residual == 0);
  }
  CHECK(eigen_check(5, 5, 10000).max_residual == 0);
  const auto r15 = eigen_check(15, 7, 1000);
  CHECK(r15.max_residual == 0);
  CHECK(r15.integral());
}

TEST_CASE("a wrong character is caught") {
  // dropping the (-1)^lambda twist flips chi*(p) for p = 3 mod 4 and breaks the relation for odd lambda
  const auto f = eta24_dseries(3, 49 * 300);
  HeckeHalfParams params = HeckeHalfParams::for_eta24(3);
  params.chi = [](std::int64_t n) { return kronecker(-1, n) * chi12(n); };
  const auto g = hecke_tp2(f, 7, params);
  const Rational ev = g.coefficient(3) / f.coefficient(3);
  bool broken = false;
  for (std::uint64_t D = 1; D <= 300; ++D) broken = broken || g.coefficient(D) != ev * f.coefficient(D);
  CHECK(broken);
}

TEST_CASE("square classes of sources vanish") {
  const auto rep = square_class_check(7, 672415, 11, point_zero_oracle(7));
  REQUIRE(rep.entries.size() == 4);  // n = 1, 5, 7, 11
  CHECK(rep.entries[1].index == 700432);
  CHECK(rep.entries[2].index == 1372847);
  CHECK(rep.entries[3].index == 3390092);
  CHECK(rep.all_zero());

  const auto a15 = eta_power(15, 3000, Ring::exact());
  const ZeroOracle from_series = [&](std::uint64_t n) { return a15.coefficient(n) == 0; };
  const auto r15 = square_class_check(15, 1287, 7, from_series);
  REQUIRE(r15.entries.size() == 3);
  CHECK(r15.entries[1].index == 1340);
  CHECK(r15.entries[2].index == 2627);

  CHECK_THROWS_AS(square_class_check(15, 24 * 54 + 15, 7, from_series), HeckeError);
  CHECK_THROWS_AS(square_class_check(15, 1288, 7, from_series), HeckeError);
  CHECK_THROWS_AS(point_zero_oracle(15), HeckeError);
}
