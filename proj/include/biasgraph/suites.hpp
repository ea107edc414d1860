#pragma once

// Verification suites: each runs a corpus (exhaustive small graphs and/or
// seeded generator samples), evaluates one exact inequality per instance
// and aggregates the verdicts into a Report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "biasgraph/report.hpp"

namespace biasgraph {

struct SuiteInfo {
  std::string name;
  std::string label;  // theorem | observational
  std::string claim;
  nlohmann::json defaults;
};

const std::vector<SuiteInfo>& suite_catalog();

struct SuiteOptions {
  nlohmann::json params = nlohmann::json::object();  // overrides of the defaults
  std::optional<std::uint64_t> seed;                 // overrides the suite's seed
  unsigned threads = 1;
  bool keep_all = false;  // keep passing records as well as failures
};

/// Throws std::invalid_argument for an unknown suite or parameter, and
/// SizeLimitError when parameters exceed a budget.
Report verify(const std::string& suite, const SuiteOptions& opts = {});

}  // namespace biasgraph
