#pragma once

// Convolution kernels behind CoeffSeries::multiply.
//
// Every kernel has a serial reference (`*_serial`) kept deliberately plain
// for testing, and an OpenMP version (`*_omp`) that partitions the output
// index range across threads. Each output coefficient is written by exactly
// one thread, so results are bit-identical for any thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "etascan/bigint.hpp"
#include "etascan/modarith.hpp"

namespace etascan::kernels {

struct SparseTerm {
  std::size_t offset;
  i64 coeff;  // signed; residues are passed in centered form
};

struct SparseTermInt {
  std::size_t offset;
  Int coeff;
};

// out[j] = sum_t coeff_t * dense[j - offset_t]  (mod p), for j < out.size().
// Terms must be sorted by offset.
void convolve_sparse_mod_serial(std::span<const u64> dense, std::span<const SparseTerm> terms, u64 p,
                                std::span<u64> out);
void convolve_sparse_mod_omp(std::span<const u64> dense, std::span<const SparseTerm> terms, u64 p,
                             std::span<u64> out);

// Truncated Cauchy product mod p, schoolbook.
void convolve_dense_mod_serial(std::span<const u64> a, std::span<const u64> b, u64 p, std::span<u64> out);
void convolve_dense_mod_omp(std::span<const u64> a, std::span<const u64> b, u64 p, std::span<u64> out);

// Exact variants.
void convolve_sparse_exact_serial(std::span<const Int> dense, std::span<const SparseTermInt> terms,
                                  std::span<Int> out);
void convolve_sparse_exact_omp(std::span<const Int> dense, std::span<const SparseTermInt> terms,
                               std::span<Int> out);
void convolve_dense_exact_serial(std::span<const Int> a, std::span<const Int> b, std::span<Int> out);

// Kronecker substitution: pack both operands into one GMP integer each and
// let GMP's sub-quadratic multiplication do the work. Truncated to out_len.
std::vector<Int> multiply_kronecker_exact(std::span<const Int> a, std::span<const Int> b, std::size_t out_len);
std::vector<u64> multiply_kronecker_mod(std::span<const u64> a, std::span<const u64> b, u64 p,
                                        std::size_t out_len);

// Output block length used by the OpenMP kernels.
inline constexpr std::size_t kBlock = 1024;

}  // namespace etascan::kernels
