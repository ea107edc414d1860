#include "biasgraph/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

namespace biasgraph {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, csv, text)");
}

void Report::add(Record rec, bool keep) {
  ++instances;
  if (rec.pass.has_value()) {
    if (*rec.pass) {
      ++passed;
    } else {
      ++failed;
      keep = true;
    }
  }
  if (keep) records.push_back(std::move(rec));
}

void MetricSummary::add(double value) noexcept {
  if (count == 0) {
    min = max = value;
  } else {
    min = std::min(min, value);
    max = std::max(max, value);
  }
  sum += value;
  ++count;
}

void Report::observe(const std::string& metric, double value) { metrics[metric].add(value); }

namespace {

std::vector<const Record*> sorted_records(const Report& r) {
  std::vector<const Record*> out;
  for (const Record& rec : r.records) out.push_back(&rec);
  std::stable_sort(out.begin(), out.end(), [](const Record* a, const Record* b) { return a->key < b->key; });
  return out;
}

json record_json(const Record& rec) {
  json j = {{"key", rec.key}, {"data", rec.data}};
  j["pass"] = rec.pass.has_value() ? json(*rec.pass) : json(nullptr);
  return j;
}

}  // namespace

json to_json(const Report& r) {
  json metrics = json::object();
  for (const auto& [name, m] : r.metrics) {
    metrics[name] = {{"count", m.count}, {"min", m.min}, {"max", m.max}, {"sum", m.sum}, {"mean", m.mean()}};
  }
  json records = json::array();
  for (const Record* rec : sorted_records(r)) records.push_back(record_json(*rec));
  return {
      {"name", r.name},
      {"label", r.label},
      {"input", r.input},
      {"seed", r.seed},
      {"params", r.params},
      {"records", records},
      {"summary",
       {{"instances", r.instances},
        {"passed", r.passed},
        {"failed", r.failed},
        {"skipped", r.skipped},
        {"status", r.status},
        {"metrics", metrics}}},
      {"version", r.version},
  };
}

Report report_from_json(const json& j) {
  Report r;
  r.name = j.at("name").get<std::string>();
  r.label = j.at("label").get<std::string>();
  r.input = j.at("input");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.params = j.at("params");
  for (const json& rec : j.at("records")) {
    Record out{rec.at("key").get<std::string>(), std::nullopt, rec.at("data")};
    if (!rec.at("pass").is_null()) out.pass = rec.at("pass").get<bool>();
    r.records.push_back(std::move(out));
  }
  const json& s = j.at("summary");
  r.instances = s.at("instances").get<std::uint64_t>();
  r.passed = s.at("passed").get<std::uint64_t>();
  r.failed = s.at("failed").get<std::uint64_t>();
  r.skipped = s.at("skipped").get<std::uint64_t>();
  r.status = s.at("status").get<std::string>();
  for (const auto& [name, m] : s.at("metrics").items()) {
    r.metrics[name] = {m.at("count").get<std::uint64_t>(), m.at("min").get<double>(), m.at("max").get<double>(),
                       m.at("sum").get<double>()};
  }
  r.version = j.at("version").get<std::string>();
  return r;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_string()) {
    out[prefix] = j.get<std::string>();
  } else {
    out[prefix] = j.dump();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string pass_text(const std::optional<bool>& p) { return p.has_value() ? (*p ? "pass" : "FAIL") : "-"; }

void emit_csv(const Report& r, std::ostream& out) {
  const auto recs = sorted_records(r);
  std::vector<std::map<std::string, std::string>> rows;
  std::set<std::string> columns;
  for (const Record* rec : recs) {
    auto& row = rows.emplace_back();
    flatten(rec->data, "", row);
    for (const auto& [k, v] : row) columns.insert(k);
  }
  out << "key,pass";
  for (const auto& c : columns) out << ',' << csv_field(c);
  out << '\n';
  for (std::size_t i = 0; i < recs.size(); ++i) {
    out << csv_field(recs[i]->key) << ',' << pass_text(recs[i]->pass);
    for (const auto& c : columns) {
      out << ',';
      if (auto it = rows[i].find(c); it != rows[i].end()) out << csv_field(it->second);
    }
    out << '\n';
  }
}

void emit_text(const Report& r, std::ostream& out) {
  out << r.name << " [" << r.label << "] version " << r.version << '\n';
  out << "seed " << r.seed << '\n';
  if (!r.input.empty()) out << "input " << r.input.dump() << '\n';
  out << "params " << r.params.dump() << '\n';
  out << "instances " << r.instances << ", passed " << r.passed << ", failed " << r.failed << ", skipped "
      << r.skipped << ", status " << r.status << '\n';
  for (const auto& [name, m] : r.metrics) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %s: n=%llu min=%.6g max=%.6g mean=%.6g", name.c_str(),
                  static_cast<unsigned long long>(m.count), m.min, m.max, m.mean());
    out << buf << '\n';
  }
  for (const Record* rec : sorted_records(r)) {
    out << pass_text(rec->pass) << ' ' << rec->key << ' ' << rec->data.dump() << '\n';
  }
}

}  // namespace

void report_emit(const Report& r, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::kJson:
      out << to_json(r).dump(2) << '\n';
      break;
    case ReportFormat::kCsv:
      emit_csv(r, out);
      break;
    case ReportFormat::kText:
      emit_text(r, out);
      break;
  }
  out.flush();
  if (!out) throw std::runtime_error("failed to write report");
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double chernoff_tail(double beta, double lambda, TailSide side) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  if (!(lambda >= 0.0) || std::isinf(lambda)) throw std::invalid_argument("lambda must be finite and non-negative");
  const double div = side == TailSide::kUpper ? 3.0 : 2.0;
  return std::exp(-beta * beta * lambda / div);
}

}  // namespace biasgraph
