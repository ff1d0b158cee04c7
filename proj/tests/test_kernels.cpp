#include <doctest.h>
#include <omp.h>

#include <random>

#include "etascan/kernels.hpp"
#include "etascan/modarith.hpp"
#include "etascan/series.hpp"

using namespace etascan;
using namespace etascan::kernels;

namespace {

std::vector<u64> random_residues(std::size_t n, u64 p, std::mt19937_64& rng) {
  std::vector<u64> v(n);
  for (auto& x : v) x = rng() % p;
  return v;
}

std::vector<SparseTerm> random_terms(std::size_t count, std::size_t span, i64 max_abs, std::mt19937_64& rng) {
  std::vector<SparseTerm> t;
  std::size_t off = 0;
  for (std::size_t i = 0; i < count && off < span; ++i) {
    off += 1 + rng() % 50;
    const i64 c = static_cast<i64>(rng() % static_cast<u64>(max_abs)) + 1;
    t.push_back({off, rng() % 2 ? c : -c});
  }
  return t;
}

}  // namespace

TEST_CASE("sparse kernels: parallel equals serial") {
  std::mt19937_64 rng(1);
  const u64 p = default_basket()[3];
  const auto dense = random_residues(20000, p, rng);
  // unit, small (split accumulator) and huge (generic path) coefficients
  for (i64 max_abs : {i64{1}, i64{3000}, i64{1} << 40}) {
    const auto terms = random_terms(300, 20000, max_abs, rng);
    std::vector<u64> a(20000), b(20000);
    convolve_sparse_mod_serial(dense, terms, p, a);
    for (int threads : {1, 2, 3}) {
      omp_set_num_threads(threads);
      std::fill(b.begin(), b.end(), 0);
      convolve_sparse_mod_omp(dense, terms, p, b);
      CHECK(a == b);
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("generator series through both sparse kernels") {
  const u64 p = default_basket()[0];
  const std::size_t n = 50000;
  const auto J = jacobi_terms(n);
  const auto E = euler_terms(n);
  std::vector<u64> dense(n, 0);
  for (const auto& t : J) dense[t.offset] = reduce_signed(t.coeff, p);
  std::vector<u64> s(n), o(n);
  convolve_sparse_mod_serial(dense, E, p, s);
  convolve_sparse_mod_omp(dense, E, p, o);
  CHECK(s == o);
  convolve_sparse_mod_serial(dense, J, p, s);
  convolve_sparse_mod_omp(dense, J, p, o);
  CHECK(s == o);
}

TEST_CASE("dense kernels: parallel equals serial") {
  std::mt19937_64 rng(2);
  const u64 p = default_basket()[5];
  const auto a = random_residues(3000, p, rng);
  const auto b = random_residues(2500, p, rng);
  std::vector<u64> x(4000), y(4000);
  convolve_dense_mod_serial(a, b, p, x);
  convolve_dense_mod_omp(a, b, p, y);
  CHECK(x == y);
  const auto k = multiply_kronecker_mod(a, b, p, 4000);
  CHECK(k == x);
}

TEST_CASE("exact kernels agree") {
  std::mt19937_64 rng(3);
  std::vector<Int> a(700), b(600);
  for (auto& v : a) {
    v = (from_u64(rng()) << (rng() % 200)) * (rng() % 2 ? 1 : -1);
  }
  for (auto& v : b) v = Int(static_cast<long>(rng() % 1000)) - 500;
  std::vector<Int> s(900), o(900);
  convolve_dense_exact_serial(a, b, s);
  CHECK(multiply_kronecker_exact(a, b, 900) == s);

  std::vector<SparseTermInt> terms;
  for (std::size_t off = 0; off < 900; off += 1 + rng() % 40) {
    terms.push_back({off, (from_u64(rng()) << 70) - (Int(1) << 133)});
  }
  terms.push_back({950, Int(1)});
  convolve_sparse_exact_serial(a, terms, s);
  convolve_sparse_exact_omp(a, terms, o);
  CHECK(s == o);
}

TEST_CASE("Kronecker substitution handles zeros and cancellation") {
  std::vector<Int> a{1, -1}, b{1, 1};
  CHECK(multiply_kronecker_exact(a, b, 3) == std::vector<Int>{1, 0, -1});
  std::vector<Int> z(5, Int(0));
  CHECK(multiply_kronecker_exact(z, b, 4) == std::vector<Int>(4, Int(0)));
}
