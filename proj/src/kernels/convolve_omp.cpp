#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "etascan/kernels.hpp"

namespace etascan::kernels {
namespace {

std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

// Each residue (< 2^62) is split into 31-bit halves so that coefficient times
// half is a signed 32x32 -> 64 product; the signed 64-bit accumulators then
// absorb sum|coeff| * 2^31 < 2^62 without intermediate reduction.
bool fits_split_accumulator(std::span<const SparseTerm> terms) {
  u64 total = 0;
  for (const auto& t : terms) {
    u64 a = t.coeff < 0 ? static_cast<u64>(-(t.coeff + 1)) + 1 : static_cast<u64>(t.coeff);
    if (a >= (u64{1} << 31)) return false;
    total += a;
    if (total >= (u64{1} << 31)) return false;
  }
  return true;
}

void sparse_split(std::span<const u64> dense, std::span<const SparseTerm> terms, u64 p, std::span<u64> out) {
  const std::size_t n = out.size();
  const std::size_t m = std::min(dense.size(), n);
  std::vector<std::int32_t> lo(m), hi(m);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = static_cast<std::int32_t>(dense[i] & 0x7fffffff);
    hi[i] = static_cast<std::int32_t>(dense[i] >> 31);
  }

  const std::ptrdiff_t nblocks = static_cast<std::ptrdiff_t>(block_count(n));
#pragma omp parallel
  {
    alignas(64) i64 acc_lo[kBlock];
    alignas(64) i64 acc_hi[kBlock];
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
      const std::size_t b0 = static_cast<std::size_t>(b) * kBlock;
      const std::size_t b1 = std::min(n, b0 + kBlock);
      std::fill(acc_lo, acc_lo + (b1 - b0), 0);
      std::fill(acc_hi, acc_hi + (b1 - b0), 0);
      for (const auto& t : terms) {
        const std::size_t e = t.offset;
        if (e >= b1) break;
        const std::size_t j0 = std::max(b0, e);
        const std::size_t j1 = std::min(b1, e + m);
        if (j0 >= j1) continue;
        const std::int32_t* L = lo.data() + (j0 - e);
        const std::int32_t* H = hi.data() + (j0 - e);
        i64* AL = acc_lo + (j0 - b0);
        i64* AH = acc_hi + (j0 - b0);
        const std::size_t len = j1 - j0;
        const std::int32_t c = static_cast<std::int32_t>(t.coeff);
        if (c == 1) {
          for (std::size_t k = 0; k < len; ++k) {
            AL[k] += L[k];
            AH[k] += H[k];
          }
        } else if (c == -1) {
          for (std::size_t k = 0; k < len; ++k) {
            AL[k] -= L[k];
            AH[k] -= H[k];
          }
        } else {
          for (std::size_t k = 0; k < len; ++k) {
            AL[k] += static_cast<i64>(c) * L[k];
            AH[k] += static_cast<i64>(c) * H[k];
          }
        }
      }
      for (std::size_t j = b0; j < b1; ++j) {
        const i128 v = (static_cast<i128>(acc_hi[j - b0]) << 31) + acc_lo[j - b0];
        out[j] = reduce_signed(v, p);
      }
    }
  }
}

void sparse_generic(std::span<const u64> dense, std::span<const SparseTerm> terms, u64 p, std::span<u64> out) {
  const std::size_t n = out.size();
  const std::size_t m = std::min(dense.size(), n);
  std::vector<u64> cs(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) cs[t] = reduce_signed(terms[t].coeff, p);
  const std::ptrdiff_t nblocks = static_cast<std::ptrdiff_t>(block_count(n));
#pragma omp parallel
  {
    alignas(64) u64 acc[kBlock];
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
      const std::size_t b0 = static_cast<std::size_t>(b) * kBlock;
      const std::size_t b1 = std::min(n, b0 + kBlock);
      std::fill(acc, acc + (b1 - b0), 0);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::size_t e = terms[t].offset;
        if (e >= b1) break;
        const std::size_t j0 = std::max(b0, e);
        const std::size_t j1 = std::min(b1, e + m);
        for (std::size_t j = j0; j < j1; ++j) {
          acc[j - b0] = add_mod(acc[j - b0], mul_mod(cs[t], dense[j - e], p), p);
        }
      }
      std::copy(acc, acc + (b1 - b0), out.begin() + static_cast<std::ptrdiff_t>(b0));
    }
  }
}

}  // namespace

void convolve_sparse_mod_omp(std::span<const u64> dense, std::span<const SparseTerm> terms, u64 p,
                             std::span<u64> out) {
  if (fits_split_accumulator(terms)) {
    sparse_split(dense, terms, p, out);
  } else {
    sparse_generic(dense, terms, p, out);
  }
}

void convolve_dense_mod_omp(std::span<const u64> a, std::span<const u64> b, u64 p, std::span<u64> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t ks = 0; ks < n; ++ks) {
    const std::size_t k = static_cast<std::size_t>(ks);
    const std::size_t i0 = k >= b.size() ? k - b.size() + 1 : 0;
    const std::size_t i1 = std::min(k + 1, a.size());
    // a[i] * b[k-i] < 2^124; reduce every 8 terms to stay inside 128 bits
    u128 s = 0;
    unsigned pending = 0;
    for (std::size_t i = i0; i < i1; ++i) {
      s += static_cast<u128>(a[i]) * b[k - i];
      if (++pending == 8) {
        s %= p;
        pending = 0;
      }
    }
    out[k] = static_cast<u64>(s % p);
  }
}

void convolve_sparse_exact_omp(std::span<const Int> dense, std::span<const SparseTermInt> terms,
                               std::span<Int> out) {
  const std::size_t n = out.size();
  const std::size_t m = std::min(dense.size(), n);
  const std::ptrdiff_t nblocks = static_cast<std::ptrdiff_t>(block_count(n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::size_t b0 = static_cast<std::size_t>(b) * kBlock;
    const std::size_t b1 = std::min(n, b0 + kBlock);
    for (std::size_t j = b0; j < b1; ++j) out[j] = 0;
    for (const auto& t : terms) {
      const std::size_t e = t.offset;
      if (e >= b1) break;
      const std::size_t j0 = std::max(b0, e);
      const std::size_t j1 = std::min(b1, e + m);
      if (t.coeff == 1) {
        for (std::size_t j = j0; j < j1; ++j) out[j] += dense[j - e];
      } else if (t.coeff == -1) {
        for (std::size_t j = j0; j < j1; ++j) out[j] -= dense[j - e];
      } else {
        for (std::size_t j = j0; j < j1; ++j) {
          mpz_addmul(out[j].get_mpz_t(), t.coeff.get_mpz_t(), dense[j - e].get_mpz_t());
        }
      }
    }
  }
}

}  // namespace etascan::kernels
