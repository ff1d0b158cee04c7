#pragma once

// Sources and descendant chains for odd r < 24.
//
// With D0 = 24 n0 + r, a vanishing a_r(n0) forces a_r(n) = 0 for every
// n = n0 l^2 + r (l^2 - 1) / 24, i.e. 24 n + r = D0 l^2, with gcd(l, 6) = 1.
// When 3 | r and 27 does not divide D0 the chain extends to all odd l.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "etascan/factor.hpp"

namespace etascan {

class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// r outside the odd range [1, 24) where the chain statement holds.
class RangeError : public SourceError {
 public:
  using SourceError::SourceError;
};

enum class ChainRule { CoprimeSix, OddOnly };

std::string to_string(ChainRule rule);

struct Admissibility {
  std::uint64_t D0 = 0;
  Factorization factors;
  bool admissible = false;  // no prime p outside {2, 3} with p^2 | D0
  bool refined = false;     // 3 | r and 27 does not divide D0
  ChainRule rule = ChainRule::CoprimeSix;
};

Admissibility admissibility(unsigned r, std::uint64_t n0);

struct ChainSpec {
  unsigned r = 0;
  std::uint64_t n0 = 0;
  ChainRule rule = ChainRule::CoprimeSix;
  std::uint64_t limit = 0;
};

// Ascending chain indices <= limit, starting with n0 itself (l = 1).
std::vector<std::uint64_t> chain(const ChainSpec& spec);

// The multiplier l if n lies on the chain of n0, found by inverting
// 24 n + r = D0 l^2 with an integer square root.
std::optional<std::uint64_t> chain_multiplier(unsigned r, std::uint64_t n0, ChainRule rule, std::uint64_t n);

enum class ZeroKind { Source, Descendant, Anomaly, Generic };

std::string to_string(ZeroKind kind);

struct SourceRecord {
  unsigned r = 0;
  std::uint64_t n0 = 0;  // the zero this record classifies
  std::uint64_t D0 = 0;
  bool admissible = false;
  bool refined = false;
  ChainRule chain_rule = ChainRule::CoprimeSix;
  ZeroKind kind = ZeroKind::Source;
  std::optional<std::uint64_t> parent;      // descendants: their source
  std::optional<std::uint64_t> multiplier;  // descendants: l
};

/// Greedy sweep over the (certified) zeros in ascending order: a zero on the
/// chain of an earlier source is a descendant, otherwise an admissible zero
/// opens a new source and an inadmissible one is flagged Anomaly. For
/// r in {1, 3} every zero is Generic and no chains are formed.
std::vector<SourceRecord> classify(unsigned r, std::span<const std::uint64_t> zeros);

struct CensusRow {
  unsigned r = 0;
  std::uint64_t X = 0;
  std::size_t sources = 0;
  std::size_t descendants = 0;
  std::size_t anomalies = 0;
};

// Counts per X (records with n0 <= X). scan_limit is the n_max the zeros
// were collected to; a grid point above it is an error.
std::vector<CensusRow> census(unsigned r, std::span<const SourceRecord> records, std::span<const std::uint64_t> grid,
                              std::uint64_t scan_limit);

}  // namespace etascan
