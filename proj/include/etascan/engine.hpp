#pragma once

// Multi-modulus scan for vanishing coefficients a_r(n) = 0.
//
//   pass 0          stage 1: a_r(0..n_max) mod the largest basket prime; the
//                   zero residues become candidates
//   passes 1..b-1   stage 2: candidates re-evaluated mod every other basket
//                   prime; any nonzero residue refutes
//   passes b..      stage 3: further primes (descending below the basket) until
//                   the product of primes used for a candidate exceeds
//                   2^(coefficient_bound + 1); all residues zero => a_r(n) = 0
//
// Every prime pass costs one series evaluation shared by all pending
// candidates.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "etascan/modarith.hpp"
#include "etascan/series.hpp"

namespace etascan {

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by ScanJob::stop_after_passes; the checkpoint is left consistent.
class ScanInterrupted : public ScanError {
 public:
  using ScanError::ScanError;
};

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultNMax = 1'000'000;
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{4} << 30;

// ETASCAN_MEMORY_BUDGET (bytes) or the default.
std::size_t memory_budget_from_env();

struct ScanJob {
  unsigned r = 1;
  std::size_t n_max = kDefaultNMax;
  std::vector<u64> prime_basket = default_basket();
  std::size_t checkpoint_interval = 1;  // prime passes between checkpoint lines
  EtaAlgorithm algo = EtaAlgorithm::SparsePower;
  std::size_t max_primes = 4096;  // cap on basket + top-up primes
  int threads = 0;                // 0: OpenMP default
  std::optional<std::filesystem::path> checkpoint;
  bool resume = false;
  std::size_t memory_budget = kDefaultMemoryBudget;
  std::optional<std::size_t> stop_after_passes;  // test hook: simulated kill

  void validate() const;
  // Stage-1 prime first (the largest), then the rest in basket order.
  std::vector<u64> ordered_basket() const;
  std::string fingerprint() const;
};

struct Candidate {
  std::vector<u64> witness_primes;
  bool operator==(const Candidate&) const = default;
};

struct CertifiedZero {
  std::size_t crt_bits = 0;
  std::size_t bound_bits = 0;
  std::vector<u64> primes;
  bool operator==(const CertifiedZero&) const = default;
};

struct RefutedNonzero {
  u64 first_nonzero_prime = 0;
  u64 residue = 0;
  bool operator==(const RefutedNonzero&) const = default;
};

using ZeroStatus = std::variant<Candidate, CertifiedZero, RefutedNonzero>;

struct ZeroRecord {
  unsigned r = 0;
  std::uint64_t n = 0;
  ZeroStatus status;

  bool certified() const { return std::holds_alternative<CertifiedZero>(status); }
  bool refuted() const { return std::holds_alternative<RefutedNonzero>(status); }
  bool operator==(const ZeroRecord&) const = default;
};

struct ScanResult {
  unsigned r = 0;
  std::size_t n_max = 0;
  std::vector<ZeroRecord> records;  // ascending n
  std::size_t passes = 0;
  std::size_t resumed_passes = 0;
  bool certification_exhausted = false;

  std::vector<std::uint64_t> certified_zeros() const;
  std::size_t uncertified() const;
};

ScanResult scan_zeros(const ScanJob& job);

// Bits B with |a_r(n)| < 2^B. Uses |a_r(n)| <= [q^n] prod (1 - q^k)^(-r), the
// number of r-coloured partitions of n, which is at most exp(pi sqrt(2 r n / 3))
// (saddle-point estimate with log P(e^-t) <= pi^2 / (6 t)). Rounded up.
std::size_t coefficient_bound(unsigned r, std::uint64_t n);

// Evaluates a_r(n) modulo the given primes in order until their product
// exceeds 2^(coefficient_bound(r, n) + 1). Throws CertificationError if the
// list runs out first.
ZeroRecord certify_zero(unsigned r, std::uint64_t n, std::span<const u64> primes);

// Whether the published data leads one to expect zeros for this r: the
// superlacunary {1, 3}, the lacunary even set {2,4,6,8,10,14,26} and the
// source-bearing {5, 7, 15}. A zero anywhere else is an anomaly.
bool zeros_expected(unsigned r);

struct SweepRow {
  unsigned r = 0;
  std::size_t n_max = 0;
  std::vector<std::uint64_t> zeros;  // certified
  std::size_t uncertified = 0;
  bool empty() const { return zeros.empty() && uncertified == 0; }
  bool anomaly() const { return !empty() && !zeros_expected(r); }
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool all_empty() const;
  bool any_anomaly() const;
};

// One scan per r with `base` as the template job.
SweepReport nonvanishing_sweep(std::span<const unsigned> r_set, std::size_t n_max, const ScanJob& base = {});

}  // namespace etascan
