#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "etascan/bounds.hpp"
#include "etascan/engine.hpp"
#include "etascan/halfint_hecke.hpp"
#include "etascan/maeda.hpp"
#include "etascan/series.hpp"
#include "etascan/sources.hpp"

namespace etascan::cli {

namespace {

// Runs fn and turns exceptions into a failed check.
Check attempt(const std::string& name, const std::function<std::string()>& fn) {
  try {
    std::string failure = fn();
    return {name, failure.empty(), failure};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

ScanResult run_scan(unsigned r, std::uint64_t n_max, int threads) {
  ScanJob job;
  job.r = r;
  job.n_max = n_max;
  job.threads = threads;
  job.memory_budget = memory_budget_from_env();
  return scan_zeros(job);
}

std::vector<Check> hecke_suite(const SuiteOptions& opts) {
  std::vector<Check> out;
  const std::uint64_t primes[] = {5, 7, 11, 13};
  std::vector<unsigned> rs;
  if (opts.r) rs.push_back(*opts.r);
  else for (unsigned r = 1; r <= 23; r += 2) rs.push_back(r);

  for (unsigned r : rs) {
    const DSeries f = eta24_dseries(r, opts.dmax * 169);
    for (auto p : primes) {
      out.push_back(attempt("eigen r=" + std::to_string(r) + " p=" + std::to_string(p), [&] {
        const auto rep = eigen_check(f, r, p, opts.dmax);
        return rep.max_residual == 0 ? std::string() : "residual " + to_fraction_string(rep.max_residual);
      }));
    }
    out.push_back(attempt("commute r=" + std::to_string(r) + " T(25)T(49)", [&] {
      const auto params = HeckeHalfParams::for_eta24(r);
      const DSeries g = eta24_dseries(r, 25 * 49 * 40);
      const auto a = hecke_tp2(hecke_tp2(g, 5, params), 7, params);
      const auto b = hecke_tp2(hecke_tp2(g, 7, params), 5, params);
      return a == b ? std::string() : std::string("operators do not commute");
    }));
  }
  out.push_back(attempt("square class r=7 D0=672415", [] {
    const auto rep = square_class_check(7, 672415, 11, point_zero_oracle(7));
    return rep.entries.size() == 4 ? std::string() : std::string("unexpected entry count");
  }));
  return out;
}

std::vector<Check> chains_suite(const SuiteOptions& opts) {
  const unsigned r = opts.r.value_or(15);
  const std::uint64_t n_max = opts.n_max.value_or(100000);
  std::vector<Check> out;
  const ScanResult scan = run_scan(r, n_max, opts.threads);
  const auto zeros = scan.certified_zeros();
  const std::set<std::uint64_t> zero_set(zeros.begin(), zeros.end());
  out.push_back({"all candidates settled", scan.uncertified() == 0, std::to_string(scan.uncertified()) + " unsettled"});

  const auto records = classify(r, zeros);
  std::size_t anomalies = 0, sources = 0;
  for (const auto& rec : records) {
    anomalies += rec.kind == ZeroKind::Anomaly;
    sources += rec.kind == ZeroKind::Source;
  }
  out.push_back({"no anomalies", anomalies == 0, std::to_string(anomalies) + " anomalies"});

  out.push_back(attempt("chain elements are certified zeros", [&] {
    for (const auto& rec : records) {
      if (rec.kind != ZeroKind::Source) continue;
      for (auto n : chain({r, rec.n0, rec.chain_rule, n_max})) {
        if (!zero_set.count(n)) return "index " + std::to_string(n) + " on the chain of " + std::to_string(rec.n0);
      }
    }
    return std::string();
  }));
  out.push_back(attempt("membership agrees with generation", [&] {
    for (const auto& rec : records) {
      if (rec.kind != ZeroKind::Descendant) continue;
      auto c = chain({r, *rec.parent, admissibility(r, *rec.parent).rule, rec.n0});
      if (c.empty() || c.back() != rec.n0) return "descendant " + std::to_string(rec.n0) + " not generated";
    }
    return std::string();
  }));
  if (r == 15) {
    out.push_back(attempt("r=15 zeros are 53 + 429 l(l+1)/2", [&] {
      std::vector<std::uint64_t> expect;
      for (std::uint64_t l = 0; 53 + 429 * l * (l + 1) / 2 <= n_max; ++l) expect.push_back(53 + 429 * l * (l + 1) / 2);
      return expect == zeros ? std::string() : std::string("zero set differs from the closed form");
    }));
    out.push_back({"r=15 has the single source 53", sources == 1 && records.front().n0 == 53, ""});
  }
  return out;
}

std::vector<Check> maeda_suite(const SuiteOptions& opts) {
  const std::uint64_t n_max = opts.n_max.value_or(2000);
  std::vector<Check> out;
  out.push_back(attempt("Delta^2 equivalence 2.." + std::to_string(n_max), [&] {
    const auto rep = delta_sq_equivalence(n_max);
    if (rep.field != 144169) return "field sqrt(" + to_dec(rep.field) + ")";
    for (const auto& row : rep.rows) {
      if (!row.a48_nonzero) return "a48 vanishes at q^" + std::to_string(row.m);
    }
    return std::string();
  }));
  out.push_back(attempt("Hecke multiplicativity on S_24, m, n <= 50", [] {
    const auto basis = cusp_basis(24, 2 * 2500 + 2);
    std::vector<HeckeMatrix> t(51);
    for (std::uint64_t m = 1; m <= 50; ++m) t[m] = hecke_matrix(m, basis);
    for (std::uint64_t m = 1; m <= 50; ++m) {
      for (std::uint64_t n = 1; n <= 50; ++n) {
        if (!(t[m] * t[n] == t[n] * t[m])) return "T_" + std::to_string(m) + " and T_" + std::to_string(n) + " do not commute";
        if (std::gcd(m, n) == 1 && m * n <= 50 && !(t[m] * t[n] == t[m * n])) {
          return "T_" + std::to_string(m) + " T_" + std::to_string(n) + " != T_" + std::to_string(m * n);
        }
      }
    }
    return std::string();
  }));
  for (unsigned k : {12u, 16u, 18u, 20u, 22u, 26u}) {
    const std::size_t limit = k == 12 ? 10000 : 1000;
    out.push_back(attempt("dim-1 weight " + std::to_string(k) + " nonvanishing to " + std::to_string(limit), [&] {
      const auto rep = dim1_scan(k, limit);
      return rep.zeros.empty() ? std::string() : "zero at n = " + std::to_string(rep.zeros.front());
    }));
  }
  return out;
}

std::vector<Check> bounds_suite(const SuiteOptions& opts) {
  const std::uint64_t n_max = opts.n_max.value_or(100000);
  std::vector<Check> out;
  const auto d15 = ZeroData::from_scan(run_scan(15, n_max, opts.threads));
  const auto d7 = ZeroData::from_scan(run_scan(7, n_max, opts.threads));

  out.push_back(attempt("r=15 closed-form zero count", [&] {
    for (std::uint64_t X = 0; X <= n_max; X += std::max<std::uint64_t>(1, n_max / 997)) {
      std::uint64_t expect = 0;
      while (53 + 429 * expect * (expect + 1) / 2 <= X) ++expect;
      if (zero_count(d15, X) != expect) return "mismatch at X = " + std::to_string(X);
    }
    return std::string();
  }));
  if (n_max >= 96183) {
    out.push_back(attempt("vanishing bound r=15 X=96183", [&] {
      const auto rep = cs_bound_check(d15, 96183);
      return rep.satisfied ? std::string() : std::string("not satisfied");
    }));
  }
  out.push_back(attempt("vanishing bound r=15 X=" + std::to_string(n_max), [&] {
    const auto rep = cs_bound_check(d15, n_max);
    return rep.comparison ? std::string() : std::string("comparison fails");
  }));
  out.push_back(attempt("non-vanishing bounds r=7 X=" + std::to_string(n_max), [&] {
    const auto rep = ono_bound_check(d7, n_max);
    if (!rep.linear.satisfied) return std::string("linear bound fails");
    if (rep.refined.threshold_met && !rep.refined.satisfied) return std::string("refined bound fails");
    return std::string();
  }));
  for (std::uint64_t X : {std::uint64_t{25214}, n_max}) {
    if (X > n_max) continue;
    out.push_back(attempt("non-vanishing bounds r=15 X=" + std::to_string(X), [&] {
      const auto rep = ono_bound_check(d15, X);
      if (!rep.linear.satisfied) return std::string("linear bound fails");
      if (!rep.refined.satisfied) return std::string("refined bound fails");
      return std::string();
    }));
  }
  out.push_back(attempt("chain bound r=7 X=10^10 exceeds X^(1/2)/505", [] {
    return chain_count_lower_bound(7, 10'000'000'000ULL) > Rational(100000, 505) ? std::string()
                                                                                    : std::string("bound too small");
  }));
  return out;
}

std::vector<Check> identities_suite(const SuiteOptions& opts) {
  const std::size_t precision = opts.n_max.value_or(2000);
  std::vector<Check> out;
  const Ring Z = Ring::exact();
  out.push_back(attempt("euler^3 = jacobi", [&] {
    const auto e = euler_series(precision, Z);
    const auto cube = multiply(multiply(e, e), e);
    return cube == jacobi_series(precision, Z) ? std::string() : std::string("series differ");
  }));
  out.push_back(attempt("three algorithms agree for r <= 50", [&] {
    for (unsigned r = 1; r <= 50; ++r) {
      const auto a = eta_power(r, precision, Z, EtaAlgorithm::SparsePower);
      if (!(a == eta_power(r, precision, Z, EtaAlgorithm::SigmaRecurrence)) ||
          !(a == eta_power(r, precision, Z, EtaAlgorithm::BinaryPow))) {
        return "disagreement at r = " + std::to_string(r);
      }
    }
    return std::string();
  }));
  out.push_back(attempt("reduction mod p commutes, 100 cases", [&] {
    std::mt19937_64 rng(20240101);
    const auto basket = default_basket();
    for (int i = 0; i < 100; ++i) {
      const unsigned r = 1 + rng() % 50;
      const u64 p = i % 2 ? basket[rng() % basket.size()] : primes_below(1000 + rng() % (u64{1} << 40), 1).front();
      const auto exact = eta_power(r, 400, Z);
      const auto mod = eta_power(r, 400, Ring::mod_prime(p));
      if (!(exact.reduce(p) == mod)) return "r = " + std::to_string(r) + ", p = " + std::to_string(p);
    }
    return std::string();
  }));
  out.push_back(attempt("point evaluation matches the series", [&] {
    for (unsigned r : {1u, 3u, 5u, 7u, 9u}) {
      const auto s = eta_power(r, precision, Z);
      for (std::uint64_t n = 0; n < precision; n += 37) {
        if (point_coefficient(r, n) != s.coefficient(n)) return "r = " + std::to_string(r) + ", n = " + std::to_string(n);
      }
    }
    return std::string();
  }));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hecke", "chains", "maeda", "bounds", "identities"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (suite == "hecke") return hecke_suite(opts);
  if (suite == "chains") return chains_suite(opts);
  if (suite == "maeda") return maeda_suite(opts);
  if (suite == "bounds") return bounds_suite(opts);
  if (suite == "identities") return identities_suite(opts);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace etascan::cli
