#pragma once

// Experiment reports: inputs, seed, parameters, per-instance records and a
// summary, serialised deterministically as JSON, CSV or text.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace biasgraph {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { kJson, kCsv, kText };

/// "json", "csv" or "text"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view name);

struct Record {
  std::string key;
  std::optional<bool> pass;  // empty for purely observational records
  nlohmann::json data = nlohmann::json::object();
};

struct MetricSummary {
  std::uint64_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double sum = 0.0;

  void add(double value) noexcept;
  double mean() const noexcept { return count == 0 ? 0.0 : sum / static_cast<double>(count); }
};

struct Report {
  std::string name;
  std::string label = "theorem";  // theorem | observational | probe | command
  nlohmann::json input = nlohmann::json::object();
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Record> records;
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  // instances whose premise did not apply
  std::map<std::string, MetricSummary> metrics;
  std::string status = "ok";
  std::string version = kToolVersion;

  /// Counts a checked instance; the record is kept when it failed or when
  /// `keep` is set.
  void add(Record rec, bool keep);
  void observe(const std::string& metric, double value);
  bool ok() const noexcept { return failed == 0; }
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Deterministic output; CSV rows sorted by key. Throws std::runtime_error
/// when the stream fails.
void report_emit(const Report& r, ReportFormat format, std::ostream& out);

/// FNV-1a 64-bit digest as 16 hex digits, used to identify input files.
std::string input_digest(std::string_view bytes);

enum class TailSide { kUpper, kLower };

/// exp(-beta^2 lambda / 3) for the upper tail, exp(-beta^2 lambda / 2) for
/// the lower tail. Requires beta in [0,1] and lambda >= 0.
double chernoff_tail(double beta, double lambda, TailSide side);

}  // namespace biasgraph
