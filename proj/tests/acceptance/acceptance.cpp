// End-to-end acceptance run: one [PASS]/[FAIL] line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "etascan/bounds.hpp"
#include "etascan/engine.hpp"
#include "etascan/halfint_hecke.hpp"
#include "etascan/maeda.hpp"
#include "etascan/series.hpp"
#include "etascan/sources.hpp"

using namespace etascan;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Runs a criterion body, turning exceptions into failures.
void criterion(int id, const std::string& name, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(id, name, ok, detail.str());
}

ScanResult scan(unsigned r, std::size_t n_max) {
  ScanJob job;
  job.r = r;
  job.n_max = n_max;
  return scan_zeros(job);
}

std::string head(const std::vector<std::uint64_t>& v, std::size_t k) {
  std::ostringstream o;
  for (std::size_t i = 0; i < std::min(k, v.size()); ++i) o << (i ? " " : "") << v[i];
  return o.str();
}

std::vector<std::uint64_t> r15_closed_form(std::uint64_t limit) {
  std::vector<std::uint64_t> z;
  for (std::uint64_t l = 0; 53 + 429 * l * (l + 1) / 2 <= limit; ++l) z.push_back(53 + 429 * l * (l + 1) / 2);
  return z;
}

struct Scans {
  ScanResult r5_big;   // r = 5 to 10^6
  ScanResult r15_big;  // r = 15 to 10^6
  std::vector<ScanResult> small;  // r = 5, 7, 9, 11, 13, 15 to 10^5
};

}  // namespace

int main() {
  Scans scans;

  criterion(1, "odd-r table to 1e5", [&](std::ostringstream& d) {
    const auto t0 = Clock::now();
    for (unsigned r : {5u, 7u, 9u, 11u, 13u, 15u}) scans.small.push_back(scan(r, 100000));
    const double t = seconds_since(t0);
    bool ok = t < 300;
    for (const auto& s : scans.small) {
      ok = ok && s.uncertified() == 0;
      d << "r=" << s.r << " zeros=" << s.certified_zeros().size() << " ";
    }
    const auto z5 = scans.small[0].certified_zeros();
    const std::vector<std::uint64_t> first5{1560, 1802, 1838, 2318, 2690};
    ok = ok && z5.size() >= 5 && std::equal(first5.begin(), first5.end(), z5.begin());
    ok = ok && scans.small[1].certified_zeros() == std::vector<std::uint64_t>{28017};
    for (int i : {2, 3, 4}) ok = ok && scans.small[i].certified_zeros().empty();
    ok = ok && scans.small[5].certified_zeros() == r15_closed_form(100000);
    d << "r5 head=" << head(z5, 5) << " time=" << t << "s";
    return ok;
  });

  criterion(2, "r=5 source census", [&](std::ostringstream& d) {
    const auto t0 = Clock::now();
    scans.r5_big = scan(5, 1000000);
    const double t = seconds_since(t0);
    const auto zeros = scans.r5_big.certified_zeros();
    const auto records = classify(5, zeros);
    const std::vector<std::uint64_t> grid{1000, 10000, 100000, 1000000};
    const auto rows = census(5, records, grid, 1000000);
    const std::vector<std::size_t> expected{0, 19, 70, 235};
    bool ok = scans.r5_big.uncertified() == 0 && t < 1800;
    d << "sources=";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      d << (i ? "," : "") << rows[i].sources;
      ok = ok && rows[i].sources == expected[i] && rows[i].anomalies == 0;
    }
    d << " zeros=" << zeros.size() << " time=" << t << "s";
    return ok;
  });

  criterion(3, "even-r non-vanishing to 1e4", [&](std::ostringstream& d) {
    std::vector<unsigned> rs;
    for (unsigned r = 12; r <= 132; r += 2)
      if (r != 14 && r != 26) rs.push_back(r);
    const auto rep = nonvanishing_sweep(rs, 10000);
    std::size_t nonempty = 0;
    for (const auto& row : rep.rows) nonempty += !row.empty();
    d << rep.rows.size() << " exponents, nonempty=" << nonempty;
    return rep.rows.size() == rs.size() && rep.all_empty();
  });

  criterion(4, "half-integral Hecke suite", [&](std::ostringstream& d) {
    const std::vector<std::uint64_t> ps{5, 7, 11, 13};
    std::size_t checks = 0, commutes = 0;
    bool ok = true;
    std::mt19937_64 rng(20);
    for (unsigned r = 1; r <= 23; r += 2) {
      for (auto p : ps) {
        const auto rep = eigen_check(r, p, 1000);
        ok = ok && rep.max_residual == 0;
        ++checks;
      }
      const auto params = HeckeHalfParams::for_eta24(r);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          const std::uint64_t p = ps[i], q = ps[j];
          const std::uint64_t dmax = p * p * q * q * 12;
          const auto f = eta24_dseries(r, dmax);
          DSeries g;
          g.num.resize(dmax + 1);
          for (auto& c : g.num) c = Int(static_cast<long>(rng() % 2001)) - 1000;
          const DSeries* inputs[] = {&f, &g};
          for (const DSeries* s : inputs) {
            const auto a = hecke_tp2(hecke_tp2(*s, p, params), q, params);
            const auto b = hecke_tp2(hecke_tp2(*s, q, params), p, params);
            ok = ok && a.dmax() == 12 && a == b;
            ++commutes;
          }
        }
      }
    }
    d << checks << " eigen checks, " << commutes << " commutation checks";
    return ok;
  });

  criterion(5, "S_24 discriminants and Delta^2 equivalence to 2000", [&](std::ostringstream& d) {
    const auto t0 = Clock::now();
    const std::uint64_t n_max = 2000;
    const auto rep = delta_sq_equivalence(n_max);
    // coefficients of Delta^2 by schoolbook squaring of the eta^24 product
    const auto delta = oracle::eta_product(24, n_max + 1);
    std::vector<Int> dsq(n_max + 1, Int(0));
    for (std::uint64_t i = 1; i <= n_max; ++i)
      for (std::uint64_t j = 1; i + j <= n_max; ++j) dsq[i + j] += delta[i - 1] * delta[j - 1];
    bool ok = rep.rows.size() == n_max - 1;
    std::size_t nonzero_disc = 0;
    for (const auto& row : rep.rows) {
      const bool disc_nonzero = row.disc != 0;
      nonzero_disc += disc_nonzero;
      const bool a48_nonzero = dsq[row.m] != 0;
      ok = ok && disc_nonzero && !is_perfect_square(row.disc) && row.squarefree_part &&
           *row.squarefree_part == 144169 && a48_nonzero == disc_nonzero && row.a48_nonzero == a48_nonzero;
    }
    const double t = seconds_since(t0);
    d << "m=2.." << n_max << " nonzero discriminants=" << nonzero_disc << " field=" << to_dec(rep.field)
      << " time=" << t << "s";
    return ok && t < 600;
  });

  criterion(6, "zero-count bounds", [&](std::ostringstream& d) {
    const auto t0 = Clock::now();
    scans.r15_big = scan(15, 1000000);
    const double t = seconds_since(t0);
    bool ok = scans.r15_big.uncertified() == 0 && scans.r15_big.certified_zeros() == r15_closed_form(1000000);
    const auto z15 = ZeroData::from_scan(scans.r15_big);
    const auto z7 = ZeroData::from_scan(scans.small[1]);
    for (std::uint64_t X : {96183ull, 1000000ull}) {
      const auto cs = cs_bound_check(z15, X);
      ok = ok && cs.satisfied;
      d << "cs(15," << X << ")=" << cs.satisfied << " ";
    }
    const auto o7 = ono_bound_check(z7, 100000);
    ok = ok && o7.linear.satisfied && o7.linear.ratio >= Rational(Int(84047), Int(84051));
    d << "ono(7,1e5)=" << o7.linear.satisfied << " ";
    for (std::uint64_t X : {25214ull, 1000000ull}) {
      const auto o = ono_bound_check(z15, X);
      ok = ok && o.linear.satisfied && o.linear.ratio >= Rational(Int(52), Int(53));
      d << "ono(15," << X << ")=" << o.linear.satisfied << " ";
    }
    d << "r15 scan time=" << t << "s";
    return ok;
  });

  criterion(7, "algorithm and reduction equivalence", [&](std::ostringstream& d) {
    const std::size_t prec = 2000;
    bool ok = true;
    for (unsigned r = 1; r <= 50; ++r) {
      const auto a = eta_power(r, prec, Ring::exact(), EtaAlgorithm::SparsePower);
      const auto b = eta_power(r, prec, Ring::exact(), EtaAlgorithm::SigmaRecurrence);
      const auto c = eta_power(r, prec, Ring::exact(), EtaAlgorithm::BinaryPow);
      ok = ok && a == b && a == c;
    }
    std::mt19937_64 rng(7);
    const EtaAlgorithm algos[] = {EtaAlgorithm::SparsePower, EtaAlgorithm::SigmaRecurrence, EtaAlgorithm::BinaryPow};
    for (int i = 0; i < 100; ++i) {
      const unsigned r = 1 + static_cast<unsigned>(rng() % 50);
      const u64 bound = (u64{1} << 20) + rng() % ((u64{1} << 62) - (u64{1} << 20));
      const u64 p = primes_below(bound, 1).at(0);
      const auto algo = algos[rng() % 3];
      const auto mod = eta_power(r, prec, Ring::mod_prime(p), algo);
      const auto exact = eta_power(r, prec, Ring::exact(), EtaAlgorithm::SparsePower);
      ok = ok && mod == exact.reduce(p);
    }
    d << "r=1..50 at precision " << prec << ", 100 random reductions";
    return ok;
  });

  criterion(8, "certification soundness", [&](std::ostringstream& d) {
    std::vector<const ScanResult*> all{&scans.r5_big, &scans.r15_big};
    for (const auto& s : scans.small) all.push_back(&s);
    const std::uint64_t lim = 5000;
    std::size_t reverified = 0, chain_elems = 0;
    bool ok = true;
    for (const auto* s : all) {
      if (s->records.empty() && s->n_max == 0) return false;
      const auto zeros = s->certified_zeros();
      const std::set<std::uint64_t> zset(zeros.begin(), zeros.end());
      const auto exact = oracle::eta_product(s->r, lim + 1);
      for (auto n : zeros) {
        if (n > lim) break;
        ok = ok && exact[n] == 0;
        ++reverified;
      }
      for (std::uint64_t n = 0; n <= lim && n <= s->n_max; ++n) ok = ok && ((exact[n] == 0) == zset.count(n) > 0);
      for (const auto& rec : classify(s->r, zeros)) {
        if (rec.kind != ZeroKind::Source) continue;
        for (auto n : chain({s->r, rec.n0, rec.chain_rule, s->n_max})) {
          ok = ok && zset.count(n) > 0;
          ++chain_elems;
        }
      }
    }
    d << reverified << " zeros re-verified exactly, " << chain_elems << " chain elements certified";
    return ok;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
