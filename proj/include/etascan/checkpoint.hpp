#pragma once

// Append-only JSONL checkpoints for scan_zeros. Every line carries the full
// cumulative scan state plus an FNV-1a content hash, so a torn or corrupted
// tail line is simply skipped on resume and the last intact line wins.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etascan/engine.hpp"

namespace etascan {

struct CheckpointState {
  std::string job;  // ScanJob::fingerprint()
  unsigned r = 0;
  int stage = 1;
  u64 prime = 0;  // last prime processed
  std::size_t last_n = 0;
  std::size_t passes_done = 0;
  std::vector<std::uint64_t> candidates;  // stage-1 zero residues
  std::map<std::uint64_t, RefutedNonzero> refuted;
};

std::string content_hash(const std::string& payload);

std::string encode_checkpoint_line(const CheckpointState& state);
// nullopt for malformed lines or hash mismatches.
std::optional<CheckpointState> decode_checkpoint_line(const std::string& line);

class CheckpointWriter {
 public:
  explicit CheckpointWriter(const std::filesystem::path& path, bool append);
  void write(const CheckpointState& state);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

// Last intact line whose job fingerprint matches, if any.
std::optional<CheckpointState> load_checkpoint(const std::filesystem::path& path, const std::string& job);

}  // namespace etascan
