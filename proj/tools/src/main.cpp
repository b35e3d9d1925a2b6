#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "sfw/error.hpp"
#include "sfw_cli/registry.hpp"
#include "sfw_cli/report.hpp"
#include "sfw_cli/runner.hpp"
#include "sfw_cli/scenario.hpp"

namespace {

using namespace sfw::cli;

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kVerdictFailure = 3;
constexpr int kNumericalFailure = 4;

struct Args {
  std::string config;
  std::string out;
  std::string suite;
  std::string levels;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool builtin = false;
  bool json = false;
};

std::string read_text(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError(path, "cannot open configuration file");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::pair<std::string, std::string> load_config(const Args& a) {
  if (a.builtin) {
    if (!a.config.empty()) throw ConfigError("--config", "--config and --builtin are exclusive");
    return {builtin_config(), "builtin:" + fnv1a_hex(builtin_config())};
  }
  if (a.config.empty()) throw ConfigError("--config", "a configuration file is required (or --builtin)");
  std::string text = read_text(a.config);
  return {text, fnv1a_hex(text)};
}

RunOptions options(const Args& a) {
  RunOptions o;
  if (!a.suite.empty() && a.suite != "all") {
    o.suite = parse_suite(a.suite);
    if (!o.suite) throw ConfigError("--suite", "unknown suite '" + a.suite + "' (valid: " + suite_list() + ")");
  }
  if (!a.levels.empty()) {
    static const std::regex re(R"(^(\d+)\.\.(\d+)$)");
    std::smatch m;
    if (!std::regex_match(a.levels, m, re)) throw ConfigError("--levels", "expected a..b, e.g. 1..4");
    const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo > hi || hi > 8) throw ConfigError("--levels", "need a <= b <= 8");
    o.levels = std::make_pair(lo, hi);
  }
  o.seed = a.seed;
  if (a.jobs < 1) throw ConfigError("--jobs", "need at least one worker");
  o.jobs = a.jobs;
  return o;
}

int run(const Args& a, bool sweep) {
  const auto [text, hash] = load_config(a);
  RunOptions opt = options(a);
  if (sweep && !opt.levels) opt.levels = std::make_pair(1, 4);
  std::vector<Scenario> scenarios = apply_overrides(parse_config(text), opt);
  if (scenarios.empty()) throw ConfigError("--suite", "no scenario selects suite '" + a.suite + "'");
  if (a.out.empty()) throw ConfigError("--out", "an output directory is required");
  std::filesystem::create_directories(a.out);

  const std::vector<ScenarioResult> results = run_all(scenarios, opt.jobs);
  int status = kOk;
  std::string summary;
  for (const ScenarioResult& r : results) {
    write_scenario_files(r, hash, a.out);
    std::string line;
    switch (r.outcome) {
      case Outcome::pass: line = "PASS " + r.scenario.name; break;
      case Outcome::verdict_failure:
        line = "FAIL " + r.scenario.name + ": " + r.failure;
        if (status == kOk) status = kVerdictFailure;
        break;
      case Outcome::numerical_failure:
        line = "FAIL " + r.scenario.name + ": numerical failure: " + r.failure;
        status = kNumericalFailure;
        break;
    }
    std::cout << line << '\n';
    summary += line + '\n';
  }
  std::ofstream(std::filesystem::path(a.out) / "summary.txt", std::ios::binary) << summary;
  std::cout << results.size() << " scenario(s), exit " << status << '\n';
  return status;
}

int list(const Args& a) {
  const std::string text = a.config.empty() ? builtin_config() : read_text(a.config);
  RunOptions opt;
  if (!a.suite.empty() && a.suite != "all") {
    opt.suite = parse_suite(a.suite);
    if (!opt.suite) throw ConfigError("--suite", "unknown suite '" + a.suite + "' (valid: " + suite_list() + ")");
  }
  const std::vector<Scenario> scenarios = apply_overrides(parse_config(text), opt);
  if (a.json) {
    Json arr = Json::array();
    for (const Scenario& s : scenarios) arr.push_back(s.echo());
    std::cout << arr.dump(2) << '\n';
    return kOk;
  }
  for (const Scenario& s : scenarios) {
    std::string suites;
    for (Suite x : s.suites) suites += (suites.empty() ? "" : ",") + std::string(to_string(x));
    std::printf("%-36s %-18s %s\n    %s\n", s.name.c_str(), suites.c_str(), s.claim.c_str(),
                s.description.c_str());
  }
  std::printf("%zu scenario(s)\n", scenarios.size());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-form identity and inequality workbench"};
  app.require_subcommand(1);
  Args args;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--config", args.config, "Scenario configuration (JSON)");
    sub->add_option("--out", args.out, "Output directory");
    sub->add_option("--suite", args.suite, "Run only this suite");
    sub->add_option("--levels", args.levels, "Level sweep a..b overriding the configuration");
    sub->add_option("--seed", args.seed, "Seed for randomized fields");
    sub->add_option("--jobs", args.jobs, "Worker threads");
    sub->add_flag("--builtin", args.builtin, "Use the built-in golden registry");
  };
  CLI::App* run_cmd = app.add_subcommand("run", "Run verification scenarios");
  add_run_flags(run_cmd);
  CLI::App* conv_cmd = app.add_subcommand("convergence", "Run with a level sweep (default 1..4)");
  add_run_flags(conv_cmd);
  CLI::App* list_cmd = app.add_subcommand("list-scenarios", "List the golden-suite registry");
  list_cmd->add_option("--suite", args.suite, "Only scenarios exercising this suite");
  list_cmd->add_option("--config", args.config, "List a configuration file instead");
  list_cmd->add_flag("--json", args.json, "Print the scenario echoes as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run_cmd) return run(args, false);
    if (*conv_cmd) return run(args, true);
    return list(args);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const sfw::Error& e) {
    std::cerr << "error (" << sfw::to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == sfw::ErrorKind::indefinite || e.kind() == sfw::ErrorKind::iteration
               ? kNumericalFailure
               : kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
}
