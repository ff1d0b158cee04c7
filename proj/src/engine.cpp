#include "etascan/engine.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <sstream>

#include "etascan/checkpoint.hpp"
#include "etascan/crt.hpp"

namespace etascan {

std::size_t memory_budget_from_env() {
  if (const char* v = std::getenv("ETASCAN_MEMORY_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw ScanError(std::string("ETASCAN_MEMORY_BUDGET is not a byte count: '") + v + "'");
    }
  }
  return kDefaultMemoryBudget;
}

// ---- ScanJob ---------------------------------------------------------------

namespace {
// dense residues, split halves, the output array and one factor
constexpr std::size_t kBytesPerIndex = 32;
}  // namespace

void ScanJob::validate() const {
  if (r == 0) throw ScanError("r must be positive");
  if (n_max < 1) throw ScanError("n_max must be >= 1");
  if (prime_basket.empty()) throw ScanError("prime basket is empty");
  std::set<u64> seen;
  for (u64 p : prime_basket) {
    try {
      (void)Ring::mod_prime(p);
    } catch (const SeriesError& e) {
      throw ScanError(e.what());
    }
    if (!seen.insert(p).second) throw ScanError("prime basket has duplicate " + std::to_string(p));
    if (algo == EtaAlgorithm::SigmaRecurrence && p <= n_max) {
      throw ScanError("sigma recurrence needs every basket prime > n_max");
    }
  }
  if (checkpoint_interval < 1) throw ScanError("checkpoint_interval must be >= 1");
  if (resume && !checkpoint) throw ScanError("resume requested without a checkpoint path");
  if (max_primes < prime_basket.size()) throw ScanError("max_primes is smaller than the basket");
  const double need = static_cast<double>(n_max + 1) * kBytesPerIndex;
  if (need > static_cast<double>(memory_budget)) {
    std::ostringstream msg;
    msg << "scan needs ~" << static_cast<std::uint64_t>(need) << " bytes, over the memory budget of " << memory_budget
        << " (ETASCAN_MEMORY_BUDGET)";
    throw ScanError(msg.str());
  }
}

std::vector<u64> ScanJob::ordered_basket() const {
  std::vector<u64> out = prime_basket;
  auto largest = std::max_element(out.begin(), out.end());
  std::rotate(out.begin(), largest, largest + 1);
  return out;
}

std::string ScanJob::fingerprint() const {
  std::ostringstream s;
  s << "r=" << r << ";n_max=" << n_max << ";algo=" << to_string(algo) << ";max_primes=" << max_primes << ";basket=";
  for (u64 p : ordered_basket()) s << p << ",";
  return s.str();
}

// ---- results -----------------------------------------------------------------

std::vector<std::uint64_t> ScanResult::certified_zeros() const {
  std::vector<std::uint64_t> z;
  for (const auto& rec : records) {
    if (rec.certified()) z.push_back(rec.n);
  }
  return z;
}

std::size_t ScanResult::uncertified() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const ZeroRecord& rec) {
    return std::holds_alternative<Candidate>(rec.status);
  }));
}

// ---- bound -------------------------------------------------------------------

std::size_t coefficient_bound(unsigned r, std::uint64_t n) {
  if (n == 0) return 1;  // a_r(0) = 1
  const long double x = std::numbers::pi_v<long double> *
                        std::sqrt(2.0L * static_cast<long double>(r) * static_cast<long double>(n) / 3.0L) *
                        std::numbers::log2e_v<long double>;
  // floor(x) + 2 > x + 1 leaves a full bit for rounding in the evaluation
  return static_cast<std::size_t>(std::floor(x)) + 2;
}

// ---- certify -----------------------------------------------------------------

ZeroRecord certify_zero(unsigned r, std::uint64_t n, std::span<const u64> primes) {
  const std::size_t bound = coefficient_bound(r, n);
  const std::size_t idx[] = {static_cast<std::size_t>(n)};
  Int product = 1;
  std::vector<u64> used;
  for (u64 p : primes) {
    if (std::find(used.begin(), used.end(), p) != used.end()) continue;
    const u64 residue = eta_power_at(r, idx, Ring::mod_prime(p))[0];
    if (residue != 0) return ZeroRecord{r, n, RefutedNonzero{p, residue}};
    used.push_back(p);
    product *= from_u64(p);
    const std::size_t bits = bit_length(product) - 1;
    if (bits >= bound + 1) return ZeroRecord{r, n, CertifiedZero{bits, bound, used}};
  }
  throw CertificationError("certify_zero(" + std::to_string(r) + ", " + std::to_string(n) + "): " +
                           std::to_string(used.size()) + " primes give " +
                           std::to_string(bit_length(product) > 0 ? bit_length(product) - 1 : 0) + " bits, need > " +
                           std::to_string(bound + 1));
}

// ---- scan ----------------------------------------------------------------------

ScanResult scan_zeros(const ScanJob& job) {
  job.validate();
  if (job.threads > 0) omp_set_num_threads(job.threads);

  const std::vector<u64> basket = job.ordered_basket();
  const std::string fingerprint = job.fingerprint();
  PrimeStream stream(basket);

  CheckpointState state;
  state.job = fingerprint;
  state.r = job.r;
  state.last_n = job.n_max;

  std::vector<u64> used;
  std::vector<std::size_t> prefix_bits;  // floor(log2(prod of used[0..i]))
  Int product = 1;
  auto record_prime = [&](u64 p) {
    used.push_back(p);
    product *= from_u64(p);
    prefix_bits.push_back(bit_length(product) - 1);
  };

  ScanResult result;
  result.r = job.r;
  result.n_max = job.n_max;

  if (job.resume) {
    if (auto restored = load_checkpoint(*job.checkpoint, fingerprint)) {
      state = *restored;
      for (std::size_t i = 0; i < state.passes_done; ++i) record_prime(stream.next());
      result.resumed_passes = state.passes_done;
    }
  }
  std::optional<CheckpointWriter> writer;
  if (job.checkpoint) writer.emplace(*job.checkpoint, job.resume);

  std::size_t passes_this_run = 0;
  auto after_pass = [&](u64 p) {
    state.prime = p;
    state.stage = state.passes_done <= 1 ? 1 : (state.passes_done <= basket.size() ? 2 : 3);
    ++passes_this_run;
    const bool stop = job.stop_after_passes && passes_this_run >= *job.stop_after_passes;
    if (writer && (state.passes_done % job.checkpoint_interval == 0 || stop)) writer->write(state);
    if (stop) throw ScanInterrupted("scan interrupted after " + std::to_string(state.passes_done) + " passes");
  };

  if (state.passes_done == 0) {
    const u64 p = stream.next();
    const auto series = eta_power(job.r, job.n_max + 1, Ring::mod_prime(p), job.algo);
    for (auto n : series.zero_indices()) state.candidates.push_back(n);
    record_prime(p);
    state.passes_done = 1;
    after_pass(p);
  }

  std::map<std::uint64_t, std::size_t> need_bits;
  for (auto n : state.candidates) need_bits[n] = coefficient_bound(job.r, n) + 1;

  for (;;) {
    const bool in_basket = state.passes_done < basket.size();
    std::vector<std::size_t> active;
    for (auto n : state.candidates) {
      if (state.refuted.count(n)) continue;
      if (in_basket || prefix_bits.back() < need_bits[n]) active.push_back(n);
    }
    if (active.empty()) break;
    if (state.passes_done >= job.max_primes) {
      result.certification_exhausted = true;
      break;
    }
    const u64 p = stream.next();
    const auto residues = eta_power_at(job.r, active, Ring::mod_prime(p));
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (residues[i] != 0) state.refuted[active[i]] = RefutedNonzero{p, residues[i]};
    }
    record_prime(p);
    ++state.passes_done;
    after_pass(p);
  }
  if (writer && state.passes_done % job.checkpoint_interval != 0) writer->write(state);

  result.passes = state.passes_done;
  for (auto n : state.candidates) {
    ZeroRecord rec{job.r, n, Candidate{}};
    if (auto it = state.refuted.find(n); it != state.refuted.end()) {
      rec.status = it->second;
    } else {
      std::size_t k = std::min(basket.size(), used.size());
      while (k < used.size() && prefix_bits[k - 1] < need_bits[n]) ++k;
      if (prefix_bits[k - 1] >= need_bits[n]) {
        rec.status = CertifiedZero{prefix_bits[k - 1], need_bits[n] - 1, std::vector<u64>(used.begin(), used.begin() + k)};
      } else {
        rec.status = Candidate{used};
      }
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

// ---- sweep -------------------------------------------------------------------

bool zeros_expected(unsigned r) {
  static const std::set<unsigned> expected = {1, 2, 3, 4, 5, 6, 7, 8, 10, 14, 15, 26};
  return expected.count(r) > 0;
}

bool SweepReport::all_empty() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& row) { return row.empty(); });
}

bool SweepReport::any_anomaly() const {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow& row) { return row.anomaly(); });
}

SweepReport nonvanishing_sweep(std::span<const unsigned> r_set, std::size_t n_max, const ScanJob& base) {
  if (r_set.empty()) throw ScanError("nonvanishing_sweep: empty r set");
  SweepReport report;
  for (unsigned r : r_set) {
    ScanJob job = base;
    job.r = r;
    job.n_max = n_max;
    job.checkpoint.reset();
    job.resume = false;
    const ScanResult res = scan_zeros(job);
    report.rows.push_back(SweepRow{r, n_max, res.certified_zeros(), res.uncertified()});
  }
  return report;
}

}  // namespace etascan
