#include <doctest.h>

#include <filesystem>

#include "etascan/checkpoint.hpp"
#include "etascan/report.hpp"

using namespace etascan;
namespace fs = std::filesystem;

TEST_CASE("zero records round-trip through JSON") {
  const std::vector<ZeroRecord> recs{
      {5, 1560, CertifiedZero{600, 585, {2305843009213693951ULL, 2305843009213693921ULL}}},
      {5, 1561, RefutedNonzero{2305843009213693951ULL, 12345}},
      {5, 1562, Candidate{{7, 11}}},
  };
  for (const auto& rec : recs) {
    const auto j = to_json(rec);
    CHECK(zero_record_from_json(Json::parse(j.dump())) == rec);
  }
  CHECK(to_json(recs[0])["primes"][0] == "2305843009213693951");
}

TEST_CASE("CSV and JSONL layout") {
  const std::vector<CensusRow> rows{{5, 1000, 0, 0, 0}, {5, 10000, 19, 3, 0}};
  CHECK(census_csv(rows) == "r,X,sources,descendants,anomalies\n5,1000,0,0,0\n5,10000,19,3,0\n");
  const std::vector<Json> lines{Json{{"a", 1}}, Json{{"b", "2"}}};
  CHECK(jsonl(lines) == "{\"a\":1}\n{\"b\":\"2\"}\n");
  const std::vector<DensityPoint> pts{{10, 9, Rational(Int(9), Int(11))}};
  CHECK(density_csv(2, pts) == "r,N,nonzero,density\n2,10,9,9/11\n");
}

TEST_CASE("reports serialize exact values as strings") {
  EquivalenceRow row{5, true, Int(1) << 100, Int(144169), false};
  const auto j = to_json(row);
  CHECK(j["disc"] == to_dec(Int(1) << 100));
  CHECK(j["squarefree_part"] == "144169");
  CountReport c;
  c.ratio = Rational(Int(52), Int(53));
  CHECK(to_json(c)["ratio"] == "52/53");
}

TEST_CASE("outputs are written with their hash") {
  const auto dir = fs::temp_directory_path() / "etascan_report_test";
  fs::remove_all(dir);
  const std::string content = "hello\n";
  CHECK(write_output(dir / "x.txt", content) == content_hash(content));
  CHECK(read_file(dir / "x.txt") == content);
  CHECK_THROWS_AS(read_file(dir / "missing.txt"), ReportIOError);
  CHECK_THROWS_AS(write_output("/proc/etascan/forbidden.txt", content), ReportIOError);
}

TEST_CASE("scan files load back") {
  const auto dir = fs::temp_directory_path() / "etascan_report_test";
  ScanJob job;
  job.r = 15;
  job.n_max = 2000;
  const auto res = scan_zeros(job);
  std::vector<Json> lines{Json{{"scan", true}, {"r", 15}, {"n_max", 2000}, {"passes", res.passes}}};
  for (const auto& rec : res.records) lines.push_back(to_json(rec));
  write_output(dir / "scan.jsonl", jsonl(lines));
  const auto back = read_scan_jsonl(dir / "scan.jsonl");
  CHECK(back.r == 15);
  CHECK(back.n_max == 2000);
  CHECK(back.records == res.records);
  write_output(dir / "bad.jsonl", "{\"r\":1}\n");
  CHECK_THROWS_AS(read_scan_jsonl(dir / "bad.jsonl"), ReportIOError);
}

TEST_CASE("manifest") {
  RunManifest m;
  m.command = "scan";
  m.prime_basket = {7, 11};
  m.outputs.push_back({"out/scan_r5.jsonl", "abc"});
  const auto j = m.to_json();
  CHECK(j["prime_basket"][1] == "11");
  CHECK(j["outputs"][0]["hash"] == "abc");
  CHECK(j["checkpoint"].is_null());
  CHECK(utc_timestamp().size() == 20);
}
