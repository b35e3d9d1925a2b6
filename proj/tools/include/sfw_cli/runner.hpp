#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfw/convergence.hpp"
#include "sfw_cli/scenario.hpp"

namespace sfw::cli {

struct Claim {
  std::string name;
  VerdictDetail detail;
  /// Per-level values the verdict was derived from.
  std::vector<double> values;
};

struct TableRow {
  int level = 0;
  double h_max = 0.0;
  std::vector<double> terms;
  double residual = 0.0;
  double gap = 0.0;
  double order = 0.0;
};

struct SuiteResult {
  Suite suite = Suite::reilly;
  std::vector<std::string> term_names;
  std::vector<TableRow> rows;
  std::vector<Claim> claims;
  Json notes = Json::object();
};

struct ErrorBlock {
  std::string suite;
  std::string kind;
  std::string message;
  bool numerical = false;
};

enum class Outcome { pass, verdict_failure, numerical_failure };

std::string_view to_string(Outcome o);

struct ScenarioResult {
  Scenario scenario;
  std::vector<SuiteResult> suites;
  std::vector<ErrorBlock> errors;
  Outcome outcome = Outcome::pass;
  std::string failure;  ///< first reason for a non-pass outcome
  std::vector<std::pair<std::string, double>> timings_ms;
};

struct RunOptions {
  std::optional<std::pair<int, int>> levels;
  std::optional<std::uint64_t> seed;
  std::optional<Suite> suite;
  int jobs = 1;
};

/// Applies overrides: level sweep, seed (f gets N, V gets N + 1) and suite
/// filter. Scenarios without the filtered suite are dropped.
std::vector<Scenario> apply_overrides(std::vector<Scenario> scenarios, const RunOptions& opt);

ScenarioResult run_scenario(const Scenario& s);

/// Runs scenarios on a worker pool; results are sorted by name.
std::vector<ScenarioResult> run_all(const std::vector<Scenario>& scenarios, int jobs);

/// Coefficients of a random polynomial in the order 1, x, y, x^2, xy, y^2, ...
std::vector<double> random_coefficients(const RandomPolynomial& p);
double eval_polynomial(const std::vector<double>& coeffs, int degree, double x, double y);

}  // namespace sfw::cli
