#include "etascan/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "etascan/checkpoint.hpp"

namespace etascan {

namespace {

Json primes_json(const std::vector<u64>& primes) {
  Json a = Json::array();
  for (u64 p : primes) a.push_back(std::to_string(p));
  return a;
}

std::vector<u64> primes_from(const Json& a) {
  std::vector<u64> out;
  for (const auto& p : a) out.push_back(std::stoull(p.get<std::string>()));
  return out;
}

}  // namespace

Json to_json(const ZeroRecord& rec) {
  Json j;
  j["r"] = rec.r;
  j["n"] = rec.n;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Candidate>) {
          j["status"] = "candidate";
          j["primes"] = primes_json(s.witness_primes);
        } else if constexpr (std::is_same_v<T, CertifiedZero>) {
          j["status"] = "certified";
          j["crt_bits"] = s.crt_bits;
          j["bound_bits"] = s.bound_bits;
          j["primes"] = primes_json(s.primes);
        } else {
          j["status"] = "refuted";
          j["prime"] = std::to_string(s.first_nonzero_prime);
          j["residue"] = std::to_string(s.residue);
        }
      },
      rec.status);
  return j;
}

ZeroRecord zero_record_from_json(const Json& j) {
  ZeroRecord rec;
  rec.r = j.at("r").get<unsigned>();
  rec.n = j.at("n").get<std::uint64_t>();
  const auto status = j.at("status").get<std::string>();
  if (status == "candidate") {
    rec.status = Candidate{primes_from(j.at("primes"))};
  } else if (status == "certified") {
    rec.status = CertifiedZero{j.at("crt_bits").get<std::size_t>(), j.at("bound_bits").get<std::size_t>(),
                               primes_from(j.at("primes"))};
  } else if (status == "refuted") {
    rec.status = RefutedNonzero{std::stoull(j.at("prime").get<std::string>()),
                                std::stoull(j.at("residue").get<std::string>())};
  } else {
    throw std::invalid_argument("unknown zero record status '" + status + "'");
  }
  return rec;
}

Json to_json(const SourceRecord& rec) {
  Json j;
  j["r"] = rec.r;
  j["n0"] = rec.n0;
  j["D0"] = rec.D0;
  j["kind"] = to_string(rec.kind);
  j["admissible"] = rec.admissible;
  j["refined"] = rec.refined;
  j["chain_rule"] = to_string(rec.chain_rule);
  if (rec.parent) j["source"] = *rec.parent;
  if (rec.multiplier) j["l"] = *rec.multiplier;
  return j;
}

Json to_json(const EigenReport& rep) {
  Json j;
  j["r"] = rep.r;
  j["p"] = rep.p;
  j["Dmax"] = rep.dmax;
  j["eigenvalue"] = to_fraction_string(rep.eigenvalue);
  j["residual"] = to_fraction_string(rep.max_residual);
  return j;
}

Json to_json(const EquivalenceRow& row) {
  Json j;
  j["m"] = row.m;
  j["a48_nonzero"] = row.a48_nonzero;
  j["disc"] = to_dec(row.disc);
  j["squarefree_part"] = row.squarefree_part ? Json(to_dec(*row.squarefree_part)) : Json(nullptr);
  j["B_of_m_zero"] = row.b_zero;
  return j;
}

Json to_json(const CountReport& rep) {
  Json j;
  j["r"] = rep.r;
  j["X"] = rep.X;
  j["zero_count"] = rep.zero_count;
  j["nonzero_count"] = rep.nonzero_count;
  j["ratio"] = to_fraction_string(rep.ratio);
  j["bound"] = rep.bound_name;
  j["bound_value"] = to_fraction_string(rep.bound_value);
  j["comparison"] = rep.comparison;
  j["threshold_met"] = rep.threshold_met;
  j["satisfied"] = rep.satisfied;
  return j;
}

Json to_json(const SquareClassReport& rep) {
  Json j;
  j["r"] = rep.r;
  j["D0"] = rep.D0;
  Json entries = Json::array();
  for (const auto& e : rep.entries) entries.push_back({{"n", e.n}, {"index", e.index}, {"zero", e.zero}});
  j["entries"] = std::move(entries);
  j["all_zero"] = rep.all_zero();
  return j;
}

std::string jsonl(std::span<const Json> lines) {
  std::string out;
  for (const auto& j : lines) {
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string census_csv(std::span<const CensusRow> rows) {
  std::ostringstream out;
  out << "r,X,sources,descendants,anomalies\n";
  for (const auto& row : rows) {
    out << row.r << ',' << row.X << ',' << row.sources << ',' << row.descendants << ',' << row.anomalies << '\n';
  }
  return out.str();
}

std::string density_csv(unsigned r, std::span<const DensityPoint> points) {
  std::ostringstream out;
  out << "r,N,nonzero,density\n";
  for (const auto& p : points) out << r << ',' << p.N << ',' << p.nonzero << ',' << to_fraction_string(p.density) << '\n';
  return out.str();
}

std::string write_output(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ReportIOError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw ReportIOError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ReportIOError("cannot move output into place at " + path.string() + ": " + ec.message());
  return content_hash(content);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReportIOError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScanResult read_scan_jsonl(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  ScanResult res;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
      if (j.contains("scan")) {
        res.r = j.at("r").get<unsigned>();
        res.n_max = j.at("n_max").get<std::size_t>();
        res.passes = j.value("passes", std::size_t{0});
        have_header = true;
        continue;
      }
      res.records.push_back(zero_record_from_json(j));
    } catch (const std::exception& e) {
      throw ReportIOError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw ReportIOError(path.string() + ": missing scan header line");
  return res;
}

Json RunManifest::to_json() const {
  Json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["prime_basket"] = primes_json(prime_basket);
  j["started"] = started;
  j["finished"] = finished;
  j["checkpoint"] = checkpoint ? Json(*checkpoint) : Json(nullptr);
  Json outs = Json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"hash", o.hash}});
  j["outputs"] = std::move(outs);
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace etascan
