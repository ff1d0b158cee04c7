#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace etascan::cli {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteOptions {
  std::optional<unsigned> r;
  std::optional<std::uint64_t> n_max;
  std::uint64_t dmax = 1000;
  int threads = 0;
};

std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& opts);

const std::vector<std::string>& suite_names();

}  // namespace etascan::cli
