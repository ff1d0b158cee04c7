#include "etascan/sources.hpp"

#include <algorithm>
#include <numeric>

#include "etascan/modarith.hpp"

namespace etascan {

std::string to_string(ChainRule rule) { return rule == ChainRule::CoprimeSix ? "coprime-six" : "odd-only"; }

std::string to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::Source: return "source";
    case ZeroKind::Descendant: return "descendant";
    case ZeroKind::Anomaly: return "anomaly";
    case ZeroKind::Generic: return "generic";
  }
  return "?";
}

namespace {

void require_chain_range(unsigned r) {
  if (r % 2 == 0 || r < 1 || r >= 24) {
    throw RangeError("chains are only established for odd 1 <= r < 24, got r = " + std::to_string(r));
  }
}

bool rule_allows(ChainRule rule, std::uint64_t l) {
  return rule == ChainRule::OddOnly ? (l % 2 == 1) : std::gcd(l, std::uint64_t{6}) == 1;
}

}  // namespace

Admissibility admissibility(unsigned r, std::uint64_t n0) {
  require_chain_range(r);
  Admissibility a;
  a.D0 = 24 * n0 + r;
  a.factors = factorize(a.D0);
  a.admissible = std::none_of(a.factors.begin(), a.factors.end(),
                              [](const PrimePower& f) { return f.prime > 3 && f.exponent >= 2; });
  a.refined = r % 3 == 0 && a.D0 % 27 != 0;
  a.rule = a.refined ? ChainRule::OddOnly : ChainRule::CoprimeSix;
  return a;
}

std::vector<std::uint64_t> chain(const ChainSpec& spec) {
  if (spec.limit < spec.n0) throw SourceError("chain: limit below n0");
  std::vector<std::uint64_t> out;
  const u128 D0 = static_cast<u128>(spec.n0) * 24 + spec.r;
  for (std::uint64_t l = 1;; ++l) {
    if (!rule_allows(spec.rule, l)) continue;
    const u128 l2 = static_cast<u128>(l) * l;
    if (((l2 - 1) * spec.r) % 24 != 0) {
      throw SourceError("chain: 24 does not divide r (l^2 - 1) for r = " + std::to_string(spec.r) +
                        ", l = " + std::to_string(l) + " under rule " + to_string(spec.rule));
    }
    const u128 n = (D0 * l2 - spec.r) / 24;
    if (n > spec.limit) break;
    out.push_back(static_cast<std::uint64_t>(n));
  }
  return out;
}

std::optional<std::uint64_t> chain_multiplier(unsigned r, std::uint64_t n0, ChainRule rule, std::uint64_t n) {
  const u128 D0 = static_cast<u128>(n0) * 24 + r;
  const u128 D = static_cast<u128>(n) * 24 + r;
  if (D % D0 != 0) return std::nullopt;
  const u128 q = D / D0;
  if (q > ~std::uint64_t{0}) return std::nullopt;
  const std::uint64_t l = isqrt_u64(static_cast<std::uint64_t>(q));
  if (static_cast<u128>(l) * l != q || !rule_allows(rule, l)) return std::nullopt;
  return l;
}

std::vector<SourceRecord> classify(unsigned r, std::span<const std::uint64_t> zeros) {
  std::vector<std::uint64_t> sorted(zeros.begin(), zeros.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<SourceRecord> out;
  if (r == 1 || r == 3) {
    for (auto n : sorted) {
      SourceRecord rec;
      rec.r = r;
      rec.n0 = n;
      rec.D0 = 24 * n + r;
      rec.kind = ZeroKind::Generic;
      out.push_back(rec);
    }
    return out;
  }
  require_chain_range(r);

  std::vector<std::size_t> sources;  // indices into out
  for (auto n : sorted) {
    const Admissibility adm = admissibility(r, n);
    SourceRecord rec{r, n, adm.D0, adm.admissible, adm.refined, adm.rule, ZeroKind::Source, {}, {}};
    for (std::size_t s : sources) {
      const auto& src = out[s];
      if (auto l = chain_multiplier(r, src.n0, src.chain_rule, n); l && *l > 1) {
        rec.kind = ZeroKind::Descendant;
        rec.parent = src.n0;
        rec.multiplier = *l;
        break;
      }
    }
    if (rec.kind != ZeroKind::Descendant) {
      rec.kind = adm.admissible ? ZeroKind::Source : ZeroKind::Anomaly;
      if (rec.kind == ZeroKind::Source) sources.push_back(out.size());
    }
    out.push_back(rec);
  }
  return out;
}

std::vector<CensusRow> census(unsigned r, std::span<const SourceRecord> records, std::span<const std::uint64_t> grid,
                              std::uint64_t scan_limit) {
  std::vector<CensusRow> rows;
  for (auto X : grid) {
    if (X > scan_limit) {
      throw SourceError("census grid point " + std::to_string(X) + " exceeds scan limit " + std::to_string(scan_limit));
    }
    CensusRow row{r, X, 0, 0, 0};
    for (const auto& rec : records) {
      if (rec.n0 > X) continue;
      switch (rec.kind) {
        case ZeroKind::Source: ++row.sources; break;
        case ZeroKind::Descendant: ++row.descendants; break;
        case ZeroKind::Anomaly: ++row.anomalies; break;
        case ZeroKind::Generic: break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace etascan
