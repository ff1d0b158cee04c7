#include "etascan/kernels.hpp"

namespace etascan::kernels {

void convolve_sparse_mod_serial(std::span<const u64> dense, std::span<const SparseTerm> terms, u64 p,
                                std::span<u64> out) {
  for (std::size_t j = 0; j < out.size(); ++j) {
    u64 s = 0;
    for (const auto& t : terms) {
      if (t.offset > j) break;
      std::size_t i = j - t.offset;
      if (i >= dense.size()) continue;
      s = add_mod(s, mul_mod(reduce_signed(t.coeff, p), dense[i], p), p);
    }
    out[j] = s;
  }
}

void convolve_dense_mod_serial(std::span<const u64> a, std::span<const u64> b, u64 p, std::span<u64> out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    u64 s = 0;
    for (std::size_t i = 0; i <= k && i < a.size(); ++i) {
      if (k - i >= b.size()) continue;
      s = add_mod(s, mul_mod(a[i], b[k - i], p), p);
    }
    out[k] = s;
  }
}

void convolve_sparse_exact_serial(std::span<const Int> dense, std::span<const SparseTermInt> terms,
                                  std::span<Int> out) {
  for (std::size_t j = 0; j < out.size(); ++j) {
    Int s = 0;
    for (const auto& t : terms) {
      if (t.offset > j) break;
      std::size_t i = j - t.offset;
      if (i >= dense.size()) continue;
      s += t.coeff * dense[i];
    }
    out[j] = s;
  }
}

void convolve_dense_exact_serial(std::span<const Int> a, std::span<const Int> b, std::span<Int> out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    Int s = 0;
    for (std::size_t i = 0; i <= k && i < a.size(); ++i) {
      if (k - i >= b.size() || a[i] == 0) continue;
      mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
    }
    out[k] = s;
  }
}

}  // namespace etascan::kernels
