#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "sfw/domain_mesh.hpp"
#include "sfw/space_form.hpp"

namespace sfw::cli {

using Json = nlohmann::ordered_json;

/// Malformed configuration; `where` is "line L, column C" or a field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class Suite { reilly, classical_reilly, hk, brendle, minkowski, alexandrov, rigidity };

const std::vector<Suite>& all_suites();
std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
/// "reilly, classical_reilly, ..." for usage messages.
std::string suite_list();

struct ModelSpec {
  SpaceFormKind kind = SpaceFormKind::euclidean;
  int dim = 2;
  double chart_radius = 1.0;
  std::string log_factor;  ///< custom only: expression source or rendered polynomial
  std::vector<Expression::Monomial> polynomial;  ///< custom only, when given as a table

  SpaceFormModel build() const;
};

struct RandomPolynomial {
  int degree = 3;
  std::uint64_t seed = 0;
  double offset = 0.0;
  double amplitude = 1.0;
};

/// Source of f or V for identity suites.
struct FieldSource {
  enum class Kind { expression, random, potential, problem } kind = Kind::potential;
  std::string expression;
  RandomPolynomial random;
  std::string problem;  ///< "weighted_hk" or "cmc"
  double boundary_value = 1.0;
};

struct FieldSpec {
  FieldSource f;
  FieldSource V;
  std::optional<double> K;  ///< defaults to the model curvature
};

struct Tolerances {
  double residual = 5e-2;
  double min_order = 0.8;
  double roundoff_floor = 1e-12;
  double bulk_terms = 1e-8;
  double gap = 1e-3;
  double cmc = 1e-3;
  double solver = 1e-10;
  double rigidity_stability = 0.2;
  double rigidity_floor = 1e-3;
  double curvature_bound = -1.0;
};

enum class HKMode { inequality, strict, equality };
enum class RigidityMode { ball, perturbed };
enum class Expectation { holds, inconclusive, solver_failure };

std::string_view to_string(HKMode m);
std::string_view to_string(RigidityMode m);
std::string_view to_string(Expectation e);

struct Scenario {
  std::string name;
  std::string description;
  std::string claim;  ///< which statement the scenario exercises
  ModelSpec model;
  StarDomainSpec domain;
  Json profile_echo;  ///< profile as written, for the report echo
  std::vector<Suite> suites;
  std::vector<int> levels;
  FieldSpec field;
  Tolerances tolerances;
  HKMode hk_mode = HKMode::inequality;
  RigidityMode rigidity_mode = RigidityMode::ball;
  Expectation expect = Expectation::holds;

  bool randomized() const;
  /// Every input, defaults included.
  Json echo() const;
};

/// Parses a configuration document; throws ConfigError.
std::vector<Scenario> parse_config(const std::string& text);

/// Line and column (1-based) of a byte offset.
std::pair<int, int> line_column(const std::string& text, std::size_t offset);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace sfw::cli
