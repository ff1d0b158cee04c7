#pragma once

// JSONL / CSV serialization of the scan, classification and verification
// results, plus the run manifest. Arbitrary-size integers are written as
// decimal strings and rationals as "num/den".

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "etascan/bounds.hpp"
#include "etascan/engine.hpp"
#include "etascan/halfint_hecke.hpp"
#include "etascan/maeda.hpp"
#include "etascan/sources.hpp"

namespace etascan {

using Json = nlohmann::ordered_json;

class ReportIOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const ZeroRecord& rec);
Json to_json(const SourceRecord& rec);
Json to_json(const EigenReport& rep);
Json to_json(const EquivalenceRow& row);
Json to_json(const CountReport& rep);
Json to_json(const SquareClassReport& rep);

// Inverse of to_json(ZeroRecord).
ZeroRecord zero_record_from_json(const Json& j);

std::string jsonl(std::span<const Json> lines);
std::string census_csv(std::span<const CensusRow> rows);
std::string density_csv(unsigned r, std::span<const DensityPoint> points);

// Writes atomically (temp file + rename) and returns content_hash(content).
std::string write_output(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Reads a ZeroRecord JSONL file back into a scan result for r.
ScanResult read_scan_jsonl(const std::filesystem::path& path);

struct ManifestOutput {
  std::string path;
  std::string hash;
};

struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::vector<u64> prime_basket;
  std::string started;
  std::string finished;
  std::optional<std::string> checkpoint;
  std::vector<ManifestOutput> outputs;

  Json to_json() const;
};

std::string utc_timestamp();

}  // namespace etascan
