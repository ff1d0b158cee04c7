#pragma once

// Truncated q-expansions and the coefficients a_r(n) of
//
//   eta(tau)^r = q^(r/24) * prod_{n>=1} (1 - q^n)^r = q^(r/24) * sum_n a_r(n) q^n.
//
// Index n of a CoeffSeries always refers to a_r(n), i.e. the exponent after the
// q^(r/24) prefactor has been factored out; the prefactor numerator is kept in
// valuation_num().

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "etascan/bigint.hpp"
#include "etascan/kernels.hpp"
#include "etascan/modarith.hpp"

namespace etascan {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Ring {
 public:
  static Ring exact() { return Ring(0); }
  // p must be an odd prime, 3 < p < 2^62
  static Ring mod_prime(u64 p);

  bool is_exact() const { return p_ == 0; }
  u64 prime() const;
  std::string describe() const;
  bool operator==(const Ring&) const = default;

 private:
  explicit Ring(u64 p) : p_(p) {}
  u64 p_;
};

enum class EtaAlgorithm { SparsePower, SigmaRecurrence, BinaryPow };

std::string to_string(EtaAlgorithm algo);
EtaAlgorithm parse_eta_algorithm(const std::string& name);

class CoeffSeries {
 public:
  CoeffSeries(std::vector<Int> coeffs, long valuation_num = 0);
  CoeffSeries(Ring ring, std::vector<u64> residues, long valuation_num = 0);

  static CoeffSeries zero(Ring ring, std::size_t precision, long valuation_num = 0);
  static CoeffSeries one(Ring ring, std::size_t precision);

  const Ring& ring() const { return ring_; }
  long valuation_num() const { return valuation_; }
  std::size_t precision() const;

  std::span<const Int> exact() const;
  std::span<const u64> residues() const;

  // Coefficient as an integer (the residue for ModPrime rings).
  Int coefficient(std::size_t n) const;
  bool is_zero_at(std::size_t n) const;
  std::size_t nonzero_count() const;
  std::vector<std::size_t> zero_indices() const;

  CoeffSeries reduce(u64 p) const;  // ExactInt -> ModPrime(p)
  CoeffSeries truncate(std::size_t precision) const;

  bool operator==(const CoeffSeries& other) const;

 private:
  Ring ring_;
  long valuation_;
  std::variant<std::vector<Int>, std::vector<u64>> data_;
};

// sum_{m in Z} (-1)^m q^((3m^2+m)/2), enumerated sparsely.
CoeffSeries euler_series(std::size_t precision, Ring ring);
// sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2).
CoeffSeries jacobi_series(std::size_t precision, Ring ring);

// Nonzero terms of the two generators below `precision`, sorted by offset.
std::vector<kernels::SparseTerm> euler_terms(std::size_t precision);
std::vector<kernels::SparseTerm> jacobi_terms(std::size_t precision);

enum class MultiplyStrategy { Auto, Schoolbook, Sparse, Kronecker };

// Truncated Cauchy product; precision is the smaller of the two, valuations
// add. The strategy only affects speed, never the result.
CoeffSeries multiply(const CoeffSeries& a, const CoeffSeries& b, MultiplyStrategy strategy = MultiplyStrategy::Auto);

/// a_r(0 .. precision-1) with valuation_num = r.
///
/// SparsePower multiplies floor(r/3) Jacobi and (r mod 3) Euler generators
/// using sparse convolution. BinaryPow squares-and-multiplies the Euler
/// series. SigmaRecurrence uses n a_r(n) = -r sum_{k=1}^n sigma_1(k) a_r(n-k);
/// over ModPrime(p) it needs p > precision so every n is invertible, and over
/// ExactInt the division by n is checked to be exact.
///
/// Throws SeriesError for r = 0 and for SigmaRecurrence with p <= precision.
CoeffSeries eta_power(unsigned r, std::size_t precision, Ring ring,
                      EtaAlgorithm algo = EtaAlgorithm::SparsePower);

// Residues a_r(n) mod p at the requested indices only. The generator factors
// are split into two partial products so that the last combination step runs
// per index instead of over the whole range; used for batched verification
// passes where only a few candidate indices matter.
std::vector<u64> eta_power_at(unsigned r, std::span<const std::size_t> indices, Ring ring);

// sigma_1(k) for k = 0..limit (index 0 holds 0).
std::vector<u64> sigma1_table(std::size_t limit);

// Exact a_r(n) without materializing the series, by enumerating the nonzero
// terms of all but one sparse generator. Cost O(n^((f-1)/2)) for f generator
// factors; supported when floor(r/3) + (r mod 3) <= 3.
Int point_coefficient(unsigned r, std::uint64_t n);
bool point_coefficient_supported(unsigned r);

}  // namespace etascan
