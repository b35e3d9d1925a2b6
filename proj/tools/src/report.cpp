#include "sfw_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sfw/error.hpp"

#ifndef SFW_VERSION
#define SFW_VERSION "unknown"
#endif

namespace sfw::cli {

namespace {

Json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

Json numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::string format(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary);
  if (!os) fail(ErrorKind::usage, "cannot write " + p.string());
  os << content;
  if (!os) fail(ErrorKind::usage, "failed writing " + p.string());
}

}  // namespace

Json report_json(const ScenarioResult& r, const std::string& config_hash) {
  Json j;
  j["schema"] = kReportSchema;
  j["generator"] = std::string("sfw ") + SFW_VERSION;
  j["config_hash"] = config_hash;
  j["scenario"] = r.scenario.echo();
  if (r.scenario.randomized()) {
    Json seeds;
    if (r.scenario.field.f.kind == FieldSource::Kind::random) seeds["f"] = r.scenario.field.f.random.seed;
    if (r.scenario.field.V.kind == FieldSource::Kind::random) seeds["V"] = r.scenario.field.V.random.seed;
    j["seeds"] = seeds;
  }
  j["outcome"] = std::string(to_string(r.outcome));
  if (!r.failure.empty()) j["failure"] = r.failure;
  Json suites = Json::array();
  for (const SuiteResult& s : r.suites) {
    Json sj;
    sj["suite"] = std::string(to_string(s.suite));
    Json levels = Json::array();
    for (const TableRow& row : s.rows) {
      Json lj;
      lj["level"] = row.level;
      lj["h_max"] = number(row.h_max);
      for (std::size_t k = 0; k < s.term_names.size(); ++k) lj[s.term_names[k]] = number(row.terms[k]);
      lj["residual"] = number(row.residual);
      lj["gap"] = number(row.gap);
      lj["order"] = number(row.order);
      levels.push_back(lj);
    }
    sj["levels"] = levels;
    Json claims = Json::array();
    for (const Claim& c : s.claims) {
      const VerdictDetail& d = c.detail;
      claims.push_back({{"claim", c.name},
                        {"verdict", std::string(sfw::to_string(d.verdict))},
                        {"reason", d.reason},
                        {"values", numbers(c.values)},
                        {"finest", number(d.finest)},
                        {"observed_order", number(d.order)},
                        {"extrapolated", number(d.extrapolation.value)},
                        {"error_estimate", number(d.extrapolation.error_estimate)},
                        {"extrapolation_order", number(d.extrapolation.order)},
                        {"asymptotic", d.extrapolation.asymptotic}});
    }
    sj["claims"] = claims;
    sj["notes"] = s.notes;
    suites.push_back(sj);
  }
  j["suites"] = suites;
  Json errors = Json::array();
  for (const ErrorBlock& e : r.errors)
    errors.push_back({{"suite", e.suite}, {"kind", e.kind}, {"message", e.message},
                      {"numerical", e.numerical}});
  j["errors"] = errors;
  return j;
}

Json timing_json(const ScenarioResult& r) {
  Json j;
  j["scenario"] = r.scenario.name;
  Json stages = Json::array();
  for (const auto& [stage, ms] : r.timings_ms) stages.push_back({{"stage", stage}, {"wall_ms", ms}});
  j["stages"] = stages;
  return j;
}

std::string table_csv(const SuiteResult& s) {
  std::string out = "level,h_max";
  for (const std::string& n : s.term_names) out += "," + n;
  out += ",residual,gap,order\n";
  for (const TableRow& r : s.rows) {
    out += std::to_string(r.level) + "," + format(r.h_max);
    for (double t : r.terms) out += "," + format(t);
    out += "," + format(r.residual) + "," + format(r.gap) + "," + format(r.order) + "\n";
  }
  return out;
}

ParsedTable parse_csv(const std::string& text) {
  ParsedTable t;
  std::istringstream is(text);
  std::string line;
  int number_line = 0;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    return cells;
  };
  while (std::getline(is, line)) {
    ++number_line;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (t.header.empty()) {
      t.header = cells;
      continue;
    }
    if (cells.size() != t.header.size())
      throw ConfigError("line " + std::to_string(number_line), "column count differs from the header");
    std::vector<double> row;
    for (const std::string& c : cells) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (end == c.c_str() || *end != '\0')
        throw ConfigError("line " + std::to_string(number_line), "not a number: '" + c + "'");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw ConfigError("line 1", "missing header row");
  return t;
}

void write_scenario_files(const ScenarioResult& r, const std::string& config_hash,
                          const std::string& dir) {
  const std::filesystem::path base(dir);
  const std::string& name = r.scenario.name;
  write_file(base / (name + ".report.json"), report_json(r, config_hash).dump(2) + "\n");
  write_file(base / (name + ".timing.json"), timing_json(r).dump(2) + "\n");
  for (const SuiteResult& s : r.suites)
    write_file(base / (name + "." + std::string(to_string(s.suite)) + ".csv"), table_csv(s));
}

}  // namespace sfw::cli
