#pragma once

#include <string>
#include <vector>

#include "sfw_cli/runner.hpp"

namespace sfw::cli {

inline constexpr const char* kReportSchema = "sfw-report/1";

/// Hierarchical report (JSON, schema field first). Wall-clock timings are
/// kept out so the report is bitwise reproducible.
Json report_json(const ScenarioResult& r, const std::string& config_hash);
Json timing_json(const ScenarioResult& r);

/// Flat table: header "level,h_max,<terms...>,residual,gap,order", `%.17g`
/// values, "nan" for undefined entries.
std::string table_csv(const SuiteResult& s);

struct ParsedTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Throws ConfigError on malformed input.
ParsedTable parse_csv(const std::string& text);

/// Writes <name>.report.json, <name>.timing.json and <name>.<suite>.csv into `dir`.
void write_scenario_files(const ScenarioResult& r, const std::string& config_hash,
                          const std::string& dir);

}  // namespace sfw::cli
