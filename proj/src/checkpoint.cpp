#include "etascan/checkpoint.hpp"

#include <cstdio>
#include <json.hpp>

#include "etascan/bigint.hpp"

namespace etascan {

using nlohmann::json;

std::string content_hash(const std::string& payload) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json state_payload(const CheckpointState& s) {
  json cands = json::array();
  for (auto n : s.candidates) cands.push_back(std::to_string(n));
  json refuted = json::array();
  for (const auto& [n, rec] : s.refuted) {
    refuted.push_back({std::to_string(n), std::to_string(rec.first_nonzero_prime), std::to_string(rec.residue)});
  }
  return json{{"job", s.job},
              {"stage", s.stage},
              {"r", std::to_string(s.r)},
              {"prime", std::to_string(s.prime)},
              {"last_n", std::to_string(s.last_n)},
              {"passes_done", std::to_string(s.passes_done)},
              {"candidates", cands},
              {"refuted", refuted}};
}

std::uint64_t as_u64(const json& j) { return std::stoull(j.get<std::string>()); }

}  // namespace

std::string encode_checkpoint_line(const CheckpointState& state) {
  json payload = state_payload(state);
  const std::string body = payload.dump();
  payload["hash"] = content_hash(body);
  return payload.dump();
}

std::optional<CheckpointState> decode_checkpoint_line(const std::string& line) {
  try {
    json j = json::parse(line);
    if (!j.is_object() || !j.contains("hash")) return std::nullopt;
    const std::string hash = j["hash"].get<std::string>();
    j.erase("hash");
    if (content_hash(j.dump()) != hash) return std::nullopt;
    CheckpointState s;
    s.job = j.at("job").get<std::string>();
    s.stage = j.at("stage").get<int>();
    s.r = static_cast<unsigned>(as_u64(j.at("r")));
    s.prime = as_u64(j.at("prime"));
    s.last_n = as_u64(j.at("last_n"));
    s.passes_done = as_u64(j.at("passes_done"));
    for (const auto& c : j.at("candidates")) s.candidates.push_back(as_u64(c));
    for (const auto& r : j.at("refuted")) s.refuted[as_u64(r.at(0))] = RefutedNonzero{as_u64(r.at(1)), as_u64(r.at(2))};
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

CheckpointWriter::CheckpointWriter(const std::filesystem::path& path, bool append)
    : path_(path), out_(path, append ? std::ios::app : std::ios::trunc) {
  if (!out_) throw ScanError("cannot open checkpoint '" + path.string() + "'");
}

void CheckpointWriter::write(const CheckpointState& state) {
  out_ << encode_checkpoint_line(state) << '\n';
  out_.flush();
  if (!out_) throw ScanError("checkpoint write failed: '" + path_.string() + "'");
}

std::optional<CheckpointState> load_checkpoint(const std::filesystem::path& path, const std::string& job) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::optional<CheckpointState> latest;
  std::string line;
  while (std::getline(in, line)) {
    auto s = decode_checkpoint_line(line);
    if (s && s->job == job) latest = std::move(s);
  }
  return latest;
}

}  // namespace etascan
