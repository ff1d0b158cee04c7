// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "etascan/kernels.hpp"
#include "etascan/modarith.hpp"
#include "etascan/series.hpp"

using namespace etascan;
using namespace etascan::kernels;

namespace {

std::vector<u64> random_residues(std::size_t n, u64 p) {
  std::mt19937_64 rng(n);
  std::vector<u64> v(n);
  for (auto& x : v) x = rng() % p;
  return v;
}

template <bool Parallel>
void BM_SparseJacobi(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const u64 p = default_basket()[0];
  const auto dense = random_residues(n, p);
  const auto terms = jacobi_terms(n);
  std::vector<u64> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      convolve_sparse_mod_omp(dense, terms, p, out);
    } else {
      convolve_sparse_mod_serial(dense, terms, p, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_SparseEuler(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const u64 p = default_basket()[0];
  const auto dense = random_residues(n, p);
  const auto terms = euler_terms(n);
  std::vector<u64> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      convolve_sparse_mod_omp(dense, terms, p, out);
    } else {
      convolve_sparse_mod_serial(dense, terms, p, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_DenseMod(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const u64 p = default_basket()[0];
  const auto a = random_residues(n, p);
  const auto b = random_residues(n + 1, p);
  std::vector<u64> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      convolve_dense_mod_omp(a, b, p, out);
    } else {
      convolve_dense_mod_serial(a, b, p, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_SparseExact(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto base = eta_power(5, n, Ring::exact());
  const std::vector<Int> dense(base.exact().begin(), base.exact().end());
  std::vector<SparseTermInt> terms;
  for (const auto& t : jacobi_terms(n)) terms.push_back({t.offset, Int(static_cast<long>(t.coeff))});
  std::vector<Int> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      convolve_sparse_exact_omp(dense, terms, out);
    } else {
      convolve_sparse_exact_serial(dense, terms, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_SparseJacobi<false>)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseJacobi<true>)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseEuler<false>)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseEuler<true>)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseMod<false>)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseMod<true>)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseExact<false>)->Arg(1 << 13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseExact<true>)->Arg(1 << 13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
