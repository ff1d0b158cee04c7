// etascan: scans for vanishing coefficients of eta powers, source
// classification, and the verification suites.
//
// Exit codes: 0 clean, 1 failed verification, 2 anomaly found, 3 I/O error,
// 4 bad arguments.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "etascan/bounds.hpp"
#include "etascan/checkpoint.hpp"
#include "etascan/engine.hpp"
#include "etascan/halfint_hecke.hpp"
#include "etascan/maeda.hpp"
#include "etascan/report.hpp"
#include "etascan/sources.hpp"
#include "suites.hpp"

namespace fs = std::filesystem;
using namespace etascan;

namespace {

enum Exit { kClean = 0, kVerifyFailed = 1, kAnomaly = 2, kIO = 3, kBadArgs = 4 };

struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outputs {
  fs::path dir = "out";
  RunManifest manifest;

  void add(const std::string& name, const std::string& content) {
    const fs::path path = dir / name;
    manifest.outputs.push_back({path.string(), write_output(path, content)});
  }

  void finish(const std::string& name) {
    manifest.finished = utc_timestamp();
    write_output(dir / name, manifest.to_json().dump(2) + "\n");
  }
};

Outputs start(const std::string& command, const fs::path& dir) {
  Outputs o;
  o.dir = dir;
  o.manifest.command = command;
  o.manifest.started = utc_timestamp();
  return o;
}

std::vector<u64> parse_primes(const std::string& list) {
  std::vector<u64> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw BadArgs("not a prime list: '" + list + "'");
    }
  }
  return out;
}

std::string scan_jsonl(const ScanResult& res) {
  Json header;
  header["scan"] = true;
  header["r"] = res.r;
  header["n_max"] = res.n_max;
  header["passes"] = res.passes;
  std::vector<Json> lines{header};
  for (const auto& rec : res.records) {
    if (!rec.refuted()) lines.push_back(to_json(rec));
  }
  return jsonl(lines);
}

// ---- scan ------------------------------------------------------------------

struct ScanArgs {
  unsigned r = 0;
  std::size_t n_max = kDefaultNMax;
  std::string primes;
  std::string algo = "sparse-power";
  std::string checkpoint;
  std::size_t checkpoint_interval = 1;
  std::size_t max_primes = 4096;
  bool resume = false;
  int threads = 0;
  std::string out = "out";
};

int cmd_scan(const ScanArgs& a) {
  ScanJob job;
  job.r = a.r;
  job.n_max = a.n_max;
  if (!a.primes.empty()) job.prime_basket = parse_primes(a.primes);
  job.algo = parse_eta_algorithm(a.algo);
  if (!a.checkpoint.empty()) job.checkpoint = a.checkpoint;
  job.checkpoint_interval = a.checkpoint_interval;
  job.max_primes = a.max_primes;
  job.resume = a.resume;
  job.threads = a.threads;
  job.memory_budget = memory_budget_from_env();
  job.validate();

  Outputs o = start("scan", a.out);
  o.manifest.parameters = {{"r", a.r}, {"n_max", a.n_max}, {"algo", a.algo}, {"checkpoint_interval", a.checkpoint_interval}};
  o.manifest.prime_basket = job.prime_basket;
  if (job.checkpoint) o.manifest.checkpoint = job.checkpoint->string();

  const ScanResult res = scan_zeros(job);
  const std::string stem = "scan_r" + std::to_string(a.r);
  o.add(stem + ".jsonl", scan_jsonl(res));
  o.finish(stem + ".manifest.json");

  const auto zeros = res.certified_zeros();
  std::cout << "r=" << a.r << " n_max=" << a.n_max << " certified zeros: " << zeros.size()
            << " passes: " << res.passes << " (resumed " << res.resumed_passes << ")\n";
  for (std::size_t i = 0; i < zeros.size() && i < 20; ++i) std::cout << (i ? " " : "  ") << zeros[i];
  if (!zeros.empty()) std::cout << (zeros.size() > 20 ? " ...\n" : "\n");

  int code = kClean;
  if (res.uncertified() != 0) {
    std::cerr << "anomaly: " << res.uncertified() << " candidates could not be settled\n";
    code = kAnomaly;
  }
  if (!zeros.empty() && !zeros_expected(a.r)) {
    std::cerr << "anomaly: zeros found for r = " << a.r << ", where none are expected\n";
    code = kAnomaly;
  }
  return code;
}

// ---- sources / census --------------------------------------------------------

std::vector<std::uint64_t> default_grid(std::uint64_t n_max) {
  std::vector<std::uint64_t> grid;
  for (std::uint64_t X = 1000; X <= n_max; X *= 10) grid.push_back(X);
  if (grid.empty() || grid.back() != n_max) grid.push_back(n_max);
  return grid;
}

int classify_and_report(const std::string& command, const ScanResult& res, std::vector<std::uint64_t> grid,
                        const std::string& out) {
  if (res.uncertified() != 0) throw BadArgs("scan data has unsettled candidates");
  if (grid.empty()) grid = default_grid(res.n_max);
  for (auto X : grid) {
    if (X > res.n_max) throw BadArgs("grid point " + std::to_string(X) + " beyond scan limit " + std::to_string(res.n_max));
  }
  const auto records = classify(res.r, res.certified_zeros());
  const auto rows = census(res.r, records, grid, res.n_max);

  Outputs o = start(command, out);
  o.manifest.parameters = {{"r", res.r}, {"n_max", res.n_max}, {"grid", grid}};
  std::vector<Json> lines;
  for (const auto& rec : records) lines.push_back(to_json(rec));
  const std::string stem = command + "_r" + std::to_string(res.r);
  o.add(stem + ".jsonl", jsonl(lines));
  o.add(stem + "_census.csv", census_csv(rows));
  o.finish(stem + ".manifest.json");

  std::cout << census_csv(rows);
  std::size_t anomalies = 0;
  for (const auto& rec : records) {
    if (rec.kind == ZeroKind::Anomaly) {
      std::cerr << "anomaly: zero " << rec.n0 << " is on no chain and D0 = " << rec.D0 << " is not admissible\n";
      ++anomalies;
    }
  }
  return anomalies ? kAnomaly : kClean;
}

// ---- main ------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Vanishing coefficients of powers of the Dedekind eta function"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "Certified scan for zeros of a_r(n), 0 <= n <= n-max");
  sc->add_option("--r", scan.r, "Power r of eta")->required()->check(CLI::PositiveNumber);
  sc->add_option("--n-max", scan.n_max, "Largest index scanned")->capture_default_str();
  sc->add_option("--primes", scan.primes, "Comma-separated prime basket (default: 8 primes below 2^61)");
  sc->add_option("--algo", scan.algo, "sparse-power | sigma-recurrence | binary-pow")->capture_default_str();
  sc->add_option("--checkpoint", scan.checkpoint, "JSONL checkpoint file");
  sc->add_option("--checkpoint-interval", scan.checkpoint_interval, "Prime passes between checkpoint lines")
      ->capture_default_str();
  sc->add_option("--max-primes", scan.max_primes, "Cap on primes used for certification")->capture_default_str();
  sc->add_flag("--resume", scan.resume, "Continue from the checkpoint");
  sc->add_option("--threads", scan.threads, "OpenMP threads (0: all cores)")->capture_default_str();
  sc->add_option("--out", scan.out, "Output directory")->capture_default_str();

  unsigned src_r = 0;
  std::string from_scan, src_out = "out";
  std::vector<std::uint64_t> grid;
  auto* so = app.add_subcommand("sources", "Classify the zeros of a scan file into sources and descendants");
  so->add_option("--r", src_r, "Power r (must match the scan file)")->required();
  so->add_option("--from-scan", from_scan, "Scan JSONL written by 'scan'")->required();
  so->add_option("--census-grid", grid, "X values for the census (default: powers of ten)")->delimiter(',');
  so->add_option("--out", src_out, "Output directory")->capture_default_str();

  ScanArgs cen;
  std::vector<std::uint64_t> cen_grid;
  std::string cen_from;
  auto* ce = app.add_subcommand("census", "Scan (or load a scan) and tabulate sources per X");
  ce->add_option("--r", cen.r, "Power r")->required()->check(CLI::PositiveNumber);
  ce->add_option("--n-max", cen.n_max, "Largest index scanned")->capture_default_str();
  ce->add_option("--grid", cen_grid, "X values (default: powers of ten)")->delimiter(',');
  ce->add_option("--from-scan", cen_from, "Use an existing scan JSONL instead of scanning");
  ce->add_option("--threads", cen.threads, "OpenMP threads (0: all cores)");
  ce->add_option("--out", cen.out, "Output directory")->capture_default_str();

  unsigned ch_r = 0;
  std::uint64_t ch_n0 = 0, ch_limit = 0;
  std::string ch_rule = "auto";
  auto* chn = app.add_subcommand("chain", "List the descendant chain of a source");
  chn->add_option("--r", ch_r, "Odd power r < 24")->required();
  chn->add_option("--n0", ch_n0, "Source index")->required();
  chn->add_option("--limit", ch_limit, "Largest index listed")->required();
  chn->add_option("--rule", ch_rule, "auto | coprime-six | odd-only")->capture_default_str();

  std::vector<unsigned> hv_r;
  std::vector<std::uint64_t> hv_p{5, 7, 11, 13};
  std::uint64_t hv_dmax = 1000;
  std::string hv_out = "out";
  auto* hv = app.add_subcommand("hecke-verify", "Check that eta(24 tau)^r is a T(p^2) eigenform");
  hv->add_option("--r", hv_r, "Odd powers (default: 1, 3, ..., 23)")->delimiter(',');
  hv->add_option("--p", hv_p, "Primes")->delimiter(',')->capture_default_str();
  hv->add_option("--dmax", hv_dmax, "Largest D checked")->capture_default_str();
  hv->add_option("--out", hv_out, "Output directory")->capture_default_str();

  std::uint64_t md_n = 2000;
  std::vector<unsigned> md_dim1;
  std::size_t md_dim1_n = 1000;
  std::string md_out = "out";
  auto* md = app.add_subcommand("maeda", "Delta^2 coefficients versus distinct T_m eigenvalues on S_24");
  md->add_option("--n-max", md_n, "Largest m")->capture_default_str();
  md->add_option("--dim1", md_dim1, "Also scan these one-dimensional weights")->delimiter(',');
  md->add_option("--dim1-n-max", md_dim1_n, "Length of the one-dimensional scans")->capture_default_str();
  md->add_option("--out", md_out, "Output directory")->capture_default_str();

  unsigned bd_r = 0;
  std::vector<std::uint64_t> bd_X;
  std::string bd_from, bd_out = "out";
  int bd_threads = 0;
  auto* bd = app.add_subcommand("bounds", "Check the vanishing / non-vanishing count bounds");
  bd->add_option("--r", bd_r, "5, 7 or 15")->required();
  bd->add_option("--X", bd_X, "X values")->delimiter(',')->required();
  bd->add_option("--from-scan", bd_from, "Scan JSONL (default: scan to max X)");
  bd->add_option("--threads", bd_threads, "OpenMP threads (0: all cores)");
  bd->add_option("--out", bd_out, "Output directory")->capture_default_str();

  std::string suite;
  cli::SuiteOptions vopts;
  unsigned v_r = 0;
  std::uint64_t v_n = 0;
  auto* vf = app.add_subcommand("verify", "Run a property suite; exit 0 only if every check passes");
  vf->add_option("--suite", suite, "hecke | chains | maeda | bounds | identities")
      ->required()
      ->check(CLI::IsMember(cli::suite_names()));
  vf->add_option("--r", v_r, "Power r where the suite takes one");
  vf->add_option("--n-max", v_n, "Scan / expansion length");
  vf->add_option("--dmax", vopts.dmax, "Largest D for the hecke suite")->capture_default_str();
  vf->add_option("--threads", vopts.threads, "OpenMP threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  if (*sc) return cmd_scan(scan);

  if (*so) {
    ScanResult res = read_scan_jsonl(from_scan);
    if (res.r != src_r) throw BadArgs("scan file is for r = " + std::to_string(res.r));
    return classify_and_report("sources", res, grid, src_out);
  }

  if (*ce) {
    ScanResult res;
    if (!cen_from.empty()) {
      res = read_scan_jsonl(cen_from);
      if (res.r != cen.r) throw BadArgs("scan file is for r = " + std::to_string(res.r));
    } else {
      ScanJob job;
      job.r = cen.r;
      job.n_max = cen.n_max;
      job.threads = cen.threads;
      job.memory_budget = memory_budget_from_env();
      res = scan_zeros(job);
    }
    return classify_and_report("census", res, cen_grid, cen.out);
  }

  if (*chn) {
    ChainRule rule;
    if (ch_rule == "auto") rule = admissibility(ch_r, ch_n0).rule;
    else if (ch_rule == "coprime-six") rule = ChainRule::CoprimeSix;
    else if (ch_rule == "odd-only") rule = ChainRule::OddOnly;
    else throw BadArgs("unknown rule '" + ch_rule + "'");
    const auto adm = admissibility(ch_r, ch_n0);
    std::cout << "# D0=" << adm.D0 << " admissible=" << adm.admissible << " refined=" << adm.refined
              << " rule=" << to_string(rule) << "\n";
    for (auto n : chain({ch_r, ch_n0, rule, ch_limit})) std::cout << n << "\n";
    return kClean;
  }

  if (*hv) {
    if (hv_r.empty()) for (unsigned r = 1; r <= 23; r += 2) hv_r.push_back(r);
    std::uint64_t pmax = 0;
    for (auto p : hv_p) pmax = std::max(pmax, p);
    Outputs o = start("hecke-verify", hv_out);
    o.manifest.parameters = {{"r", hv_r}, {"p", hv_p}, {"Dmax", hv_dmax}};
    std::vector<Json> lines;
    int code = kClean;
    for (unsigned r : hv_r) {
      const DSeries f = eta24_dseries(r, hv_dmax * pmax * pmax);
      for (auto p : hv_p) {
        try {
          const auto rep = eigen_check(f, r, p, hv_dmax);
          lines.push_back(to_json(rep));
          std::cout << "r=" << r << " p=" << p << " eigenvalue " << to_fraction_string(rep.eigenvalue) << " residual 0\n";
        } catch (const HeckeError& e) {
          std::cout << "r=" << r << " p=" << p << " FAIL " << e.what() << "\n";
          code = kVerifyFailed;
        }
      }
    }
    o.add("hecke.jsonl", jsonl(lines));
    o.finish("hecke.manifest.json");
    return code;
  }

  if (*md) {
    Outputs o = start("maeda", md_out);
    o.manifest.parameters = {{"n_max", md_n}, {"dim1", md_dim1}, {"dim1_n_max", md_dim1_n}};
    int code = kClean;
    try {
      const auto rep = delta_sq_equivalence(md_n);
      std::vector<Json> lines;
      std::size_t zero_a48 = 0;
      for (const auto& row : rep.rows) {
        lines.push_back(to_json(row));
        zero_a48 += !row.a48_nonzero;
      }
      o.add("maeda.jsonl", jsonl(lines));
      std::cout << "S_24 splits over Q(sqrt " << rep.field << "); T_2 eigenvalue " << rep.eigen_t2.a << " + "
                << rep.eigen_t2.b << " sqrt(s); kappa = " << rep.kappa.b << " sqrt(s)\n"
                << "m = 2.." << md_n << ": equivalence holds, " << zero_a48 << " vanishing Delta^2 coefficients\n";
    } catch (const MaedaError& e) {
      std::cout << "FAIL " << e.what() << "\n";
      code = kVerifyFailed;
    }
    for (unsigned k : md_dim1) {
      const auto rep = dim1_scan(k, md_dim1_n);
      std::cout << "weight " << k << ": " << rep.zeros.size() << " zeros up to " << md_dim1_n << "\n";
      if (!rep.zeros.empty()) code = std::max(code, int(kAnomaly));
    }
    o.finish("maeda.manifest.json");
    return code;
  }

  if (*bd) {
    const std::uint64_t xmax = *std::max_element(bd_X.begin(), bd_X.end());
    ScanResult res;
    if (!bd_from.empty()) {
      res = read_scan_jsonl(bd_from);
      if (res.r != bd_r) throw BadArgs("scan file is for r = " + std::to_string(res.r));
    } else {
      ScanJob job;
      job.r = bd_r;
      job.n_max = xmax;
      job.threads = bd_threads;
      job.memory_budget = memory_budget_from_env();
      res = scan_zeros(job);
    }
    const auto data = ZeroData::from_scan(res);
    Outputs o = start("bounds", bd_out);
    o.manifest.parameters = {{"r", bd_r}, {"X", bd_X}};
    std::vector<Json> lines;
    int code = kClean;
    auto emit = [&](const CountReport& rep) {
      lines.push_back(to_json(rep));
      std::cout << "r=" << rep.r << " X=" << rep.X << " zeros=" << rep.zero_count << " [" << rep.bound_name << "] "
                << (rep.threshold_met ? (rep.satisfied ? "satisfied" : "VIOLATED") : "below threshold") << "\n";
      if (rep.threshold_met && !rep.satisfied) code = kVerifyFailed;
    };
    for (auto X : bd_X) {
      if (X > data.limit) throw BadArgs("X = " + std::to_string(X) + " beyond scan limit");
      if (bd_r == 5 || bd_r == 7 || bd_r == 15) emit(cs_bound_check(data, X));
      if (bd_r == 7 || bd_r == 15) {
        const auto ono = ono_bound_check(data, X);
        emit(ono.linear);
        emit(ono.refined);
      }
    }
    if (lines.empty()) throw BadArgs("no bounds are stated for r = " + std::to_string(bd_r));
    o.add("bounds_r" + std::to_string(bd_r) + ".jsonl", jsonl(lines));
    o.finish("bounds_r" + std::to_string(bd_r) + ".manifest.json");
    return code;
  }

  if (*vf) {
    if (v_r) vopts.r = v_r;
    if (v_n) vopts.n_max = v_n;
    const auto checks = cli::run_suite(suite, vopts);
    bool ok = true;
    for (const auto& c : checks) {
      std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
      if (!c.ok && !c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
      ok = ok && c.ok;
    }
    return ok ? kClean : kVerifyFailed;
  }
  return kBadArgs;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ReportIOError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIO;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIO;
  } catch (const BadArgs& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const ScanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const SourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const SeriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const CertificationError& e) {
    std::cerr << "anomaly: " << e.what() << "\n";
    return kAnomaly;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
