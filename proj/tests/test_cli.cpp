#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>

#include "doctest.h"
#include "sfw_cli/registry.hpp"
#include "sfw_cli/report.hpp"
#include "sfw_cli/runner.hpp"
#include "sfw_cli/scenario.hpp"

using namespace sfw;
using namespace sfw::cli;

namespace {

std::string one_scenario(const std::string& body) {
  return R"({"schema": "sfw-config/1", "scenarios": [)" + body + "]}";
}

const char* kBall = R"({
  "name": "ball", "model": {"kind": "hyperbolic"},
  "domain": {"profile": {"type": "geodesic_ball", "radius": 0.7}},
  "suites": ["hk"], "levels": [1, 2, 3, 4], "hk_mode": "equality"})";

std::string config_error(const std::string& text) {
  try {
    (void)parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

Scenario builtin(const std::string& name) {
  for (Scenario& s : parse_config(builtin_config()))
    if (s.name == name) return s;
  FAIL("no builtin scenario " << name);
  return {};
}

const Claim* find_claim(const ScenarioResult& r, const std::string& name) {
  for (const SuiteResult& s : r.suites)
    for (const Claim& c : s.claims)
      if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("builtin registry covers every suite") {
  const std::vector<Scenario> all = parse_config(builtin_config());
  CHECK(all.size() >= 12);
  std::set<Suite> suites;
  std::set<std::string> names;
  for (const Scenario& s : all) {
    names.insert(s.name);
    CHECK_FALSE(s.description.empty());
    CHECK_FALSE(s.claim.empty());
    suites.insert(s.suites.begin(), s.suites.end());
  }
  CHECK(names.size() == all.size());
  CHECK(suites.size() == all_suites().size());
}

TEST_CASE("suite names") {
  for (Suite s : all_suites()) CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("hkk").has_value());
  const std::string list = suite_list();
  for (Suite s : all_suites()) CHECK(list.find(to_string(s)) != std::string::npos);
}

TEST_CASE("suite filter keeps only matching scenarios") {
  RunOptions opt;
  opt.suite = Suite::minkowski;
  const auto kept = apply_overrides(parse_config(builtin_config()), opt);
  REQUIRE_FALSE(kept.empty());
  for (const Scenario& s : kept) CHECK(s.suites == std::vector<Suite>{Suite::minkowski});
}

TEST_CASE("level and seed overrides") {
  RunOptions opt;
  opt.levels = std::pair{1, 3};
  opt.seed = 99;
  const auto out = apply_overrides({builtin("reilly_custom_random")}, opt);
  REQUIRE(out.size() == 1);
  CHECK(out[0].levels == std::vector<int>{1, 2, 3});
  CHECK(out[0].field.f.random.seed == 99);
  CHECK(out[0].field.V.random.seed == 100);
}

TEST_CASE("malformed configurations") {
  CHECK(config_error("{\"scenarios\": [}").find("line 1, column") != std::string::npos);
  CHECK(config_error("{\n  \"scenarios\": [\n    {,\n").find("line 3") != std::string::npos);
  CHECK(config_error(one_scenario("")).find("empty") != std::string::npos);
  CHECK(config_error(R"({"scenarios": []})").find("$.scenarios") != std::string::npos);

  std::string bad = kBall;
  bad.replace(bad.find("\"radius\""), 8, "\"radios\"");
  const std::string e = config_error(one_scenario(bad));
  CHECK(e.find("$.scenarios[0].domain.profile") != std::string::npos);

  std::string suite = kBall;
  suite.replace(suite.find("[\"hk\"]"), 6, "[\"hkk\"]");
  const std::string es = config_error(one_scenario(suite));
  CHECK(es.find("minkowski") != std::string::npos);

  std::string levels = kBall;
  levels.replace(levels.find("[1, 2, 3, 4]"), 12, "[2, 2, 3]");
  CHECK_FALSE(config_error(one_scenario(levels)).empty());

  CHECK(config_error(one_scenario(std::string(kBall) + "," + kBall)).find("duplicate") != std::string::npos);

  const std::string unseeded = R"({
    "name": "r", "model": {"kind": "euclidean"}, "domain": {"profile": {"type": "fourier", "a0": 0.5}},
    "suites": ["reilly"], "levels": [1, 2],
    "field": {"f": {"random": {"degree": 3}}, "V": "potential", "K": 0.0}})";
  CHECK(config_error(one_scenario(unseeded)).find("seed") != std::string::npos);
  CHECK(config_error(R"({"schema": "sfw-config/9", "scenarios": [1]})").find("schema") != std::string::npos);
}

TEST_CASE("line and column of byte offsets") {
  const std::string t = "ab\ncd\n\nef";
  CHECK(line_column(t, 0) == std::pair{1, 1});
  CHECK(line_column(t, 4) == std::pair{2, 2});
  CHECK(line_column(t, 7) == std::pair{4, 1});
}

TEST_CASE("fnv-1a test vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("random polynomial coefficients are seeded and bounded") {
  RandomPolynomial p;
  p.degree = 3;
  p.seed = 7;
  p.offset = 1.5;
  p.amplitude = 0.3;
  const auto a = random_coefficients(p), b = random_coefficients(p);
  CHECK(a == b);
  REQUIRE(a.size() == 10);
  // Raw coefficients lie in [-1, 1); offset and amplitude apply at sampling.
  for (double c : a) CHECK(std::abs(c) <= 1.0);
  p.seed = 8;
  CHECK(random_coefficients(p) != a);
  const std::vector<double> c = {1, 2, 3, 4, 5, 6};
  CHECK(eval_polynomial(c, 2, 0.5, -1.0) == doctest::Approx(1 + 1 - 3 + 1 - 2.5 + 6));
}

TEST_CASE("hyperbolic ball scenario: gap column converges") {
  const auto scenarios = parse_config(one_scenario(kBall));
  const ScenarioResult r = run_scenario(scenarios[0]);
  CHECK(r.outcome == Outcome::pass);
  REQUIRE(r.suites.size() == 1);
  const auto& rows = r.suites[0].rows;
  REQUIRE(rows.size() == 4);
  CHECK(std::abs(rows[3].gap) < std::abs(rows[0].gap));
  CHECK(std::abs(rows[3].gap) < 1e-3);
  CHECK(rows[3].order >= 0.8);
  CHECK(std::isnan(rows[0].order));
}

TEST_CASE("tables round-trip") {
  const auto scenarios = parse_config(one_scenario(kBall));
  const ScenarioResult r = run_scenario(scenarios[0]);
  const SuiteResult& s = r.suites[0];
  const ParsedTable t = parse_csv(table_csv(s));
  REQUIRE(t.header.size() == s.term_names.size() + 5);
  CHECK(t.header[0] == "level");
  CHECK(t.header[1] == "h_max");
  CHECK(t.header.back() == "order");
  REQUIRE(t.rows.size() == s.rows.size());
  auto same = [](double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
    return std::abs(a - b) <= 1e-15 * std::max(std::abs(a), std::abs(b));
  };
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const TableRow& row = s.rows[i];
    CHECK(t.rows[i][0] == row.level);
    CHECK(same(t.rows[i][1], row.h_max));
    for (std::size_t k = 0; k < row.terms.size(); ++k) CHECK(same(t.rows[i][2 + k], row.terms[k]));
    CHECK(same(t.rows[i][2 + row.terms.size()], row.residual));
    CHECK(same(t.rows[i][3 + row.terms.size()], row.gap));
    CHECK(same(t.rows[i][4 + row.terms.size()], row.order));
  }
  CHECK_THROWS_AS((void)parse_csv("level,h_max\n1,abc\n"), ConfigError);
  CHECK_THROWS_AS((void)parse_csv("level,h_max\n1\n"), ConfigError);
}

TEST_CASE("reports are deterministic and versioned") {
  Scenario s = builtin("reilly_custom_random");
  s.levels = {1, 2};
  const std::string h = fnv1a_hex("config");
  const std::string a = report_json(run_scenario(s), h).dump(2);
  const std::string b = report_json(run_scenario(s), h).dump(2);
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j.begin().key() == "schema");
  CHECK(j["schema"] == kReportSchema);
  CHECK(a.find("wall") == std::string::npos);
  CHECK(a.find("\"seed\": 7") != std::string::npos);
  const auto parallel = run_all({s, builtin("hk_euclidean_disk")}, 2);
  REQUIRE(parallel.size() == 2);
  CHECK(parallel[0].scenario.name < parallel[1].scenario.name);
}

TEST_CASE("hypothesis guard: declared expectation decides the outcome") {
  Scenario s = builtin("hk_nonconvex_guard");
  s.levels = {1, 2};
  const ScenarioResult inconclusive = run_scenario(s);
  CHECK(inconclusive.outcome == Outcome::pass);
  const Claim* c = find_claim(inconclusive, "precondition");
  REQUIRE(c != nullptr);
  CHECK(c->detail.verdict == Verdict::inconclusive);
  s.expect = Expectation::holds;
  const ScenarioResult failed = run_scenario(s);
  CHECK(failed.outcome == Outcome::verdict_failure);
  CHECK_FALSE(failed.failure.empty());
}

TEST_CASE("solver failures are numerical failures unless expected") {
  Scenario s = builtin("solver_spherical_beyond_hemisphere");
  CHECK(run_scenario(s).outcome == Outcome::pass);
  s.expect = Expectation::holds;
  const ScenarioResult r = run_scenario(s);
  CHECK(r.outcome == Outcome::numerical_failure);
  REQUIRE_FALSE(r.errors.empty());
  CHECK(r.errors[0].numerical);
  CHECK(r.errors[0].kind == "indefinite");
}

TEST_CASE("scenario echo carries every default") {
  const Scenario s = parse_config(one_scenario(kBall))[0];
  const Json e = s.echo();
  CHECK(e.contains("tolerances"));
  CHECK(e["tolerances"]["gap"] == 1e-3);
  CHECK(e["levels"].size() == 4);
  CHECK(e.contains("expect"));
}

TEST_CASE("shipped golden configuration matches the builtin registry") {
  std::ifstream in(std::string(SFW_CONFIG_DIR) + "/golden.json");
  REQUIRE(in.good());
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  const auto file = parse_config(text), reg = parse_config(builtin_config());
  REQUIRE(file.size() == reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) CHECK(file[i].echo() == reg[i].echo());
}
