#include "sfw_cli/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "sfw/error.hpp"

namespace sfw::cli {

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s{Suite::reilly,    Suite::classical_reilly, Suite::hk,
                                    Suite::brendle,   Suite::minkowski,        Suite::alexandrov,
                                    Suite::rigidity};
  return s;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::reilly: return "reilly";
    case Suite::classical_reilly: return "classical_reilly";
    case Suite::hk: return "hk";
    case Suite::brendle: return "brendle";
    case Suite::minkowski: return "minkowski";
    case Suite::alexandrov: return "alexandrov";
    case Suite::rigidity: return "rigidity";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string suite_list() {
  std::string out;
  for (Suite s : all_suites()) {
    if (!out.empty()) out += ", ";
    out += to_string(s);
  }
  return out + ", all";
}

std::string_view to_string(HKMode m) {
  switch (m) {
    case HKMode::inequality: return "inequality";
    case HKMode::strict: return "strict";
    case HKMode::equality: return "equality";
  }
  return "?";
}

std::string_view to_string(RigidityMode m) {
  return m == RigidityMode::ball ? "ball" : "perturbed";
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::holds: return "holds";
    case Expectation::inconclusive: return "inconclusive";
    case Expectation::solver_failure: return "solver_failure";
  }
  return "?";
}

SpaceFormModel ModelSpec::build() const {
  switch (kind) {
    case SpaceFormKind::euclidean: return SpaceFormModel::euclidean(dim);
    case SpaceFormKind::hyperbolic: return SpaceFormModel::hyperbolic(dim);
    case SpaceFormKind::spherical: return SpaceFormModel::spherical(dim, chart_radius);
    case SpaceFormKind::custom:
      return SpaceFormModel::custom(
          dim, polynomial.empty() ? Expression::parse(log_factor, dim)
                                  : Expression::polynomial(polynomial, dim));
  }
  fail(ErrorKind::usage, "unknown model kind");
}

bool Scenario::randomized() const {
  return field.f.kind == FieldSource::Kind::random || field.V.kind == FieldSource::Kind::random;
}

namespace {

Json source_echo(const FieldSource& s) {
  Json j;
  switch (s.kind) {
    case FieldSource::Kind::expression: j["expression"] = s.expression; break;
    case FieldSource::Kind::random:
      j["random"] = {{"degree", s.random.degree},
                     {"seed", s.random.seed},
                     {"offset", s.random.offset},
                     {"amplitude", s.random.amplitude}};
      break;
    case FieldSource::Kind::potential: j = "potential"; break;
    case FieldSource::Kind::problem:
      j["problem"] = s.problem;
      j["boundary_value"] = s.boundary_value;
      break;
  }
  return j;
}

/// Typed access to a JSON object with field paths in every error.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void bad(const std::string& what) const { throw ConfigError(path_, what); }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Node at(const char* key) const {
    if (!j_.is_object()) bad("expected an object");
    if (!j_.contains(key)) throw ConfigError(path_ + "." + key, "missing required field");
    return {j_.at(key), path_ + "." + key};
  }

  Node at(std::size_t i) const { return {j_.at(i), path_ + "[" + std::to_string(i) + "]"}; }

  double number() const {
    if (!j_.is_number()) bad("expected a number");
    const double v = j_.get<double>();
    if (!std::isfinite(v)) bad("expected a finite number");
    return v;
  }

  int integer() const {
    if (!j_.is_number_integer()) bad("expected an integer");
    return j_.get<int>();
  }

  std::uint64_t unsigned_integer() const {
    if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<long long>() >= 0))
      bad("expected a non-negative integer");
    return j_.get<std::uint64_t>();
  }

  std::string string() const {
    if (!j_.is_string()) bad("expected a string");
    return j_.get<std::string>();
  }

  std::vector<double> numbers() const {
    if (!j_.is_array()) bad("expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.push_back(at(i).number());
    return out;
  }

  double number_or(const char* key, double fallback) const {
    return has(key) ? at(key).number() : fallback;
  }

  void only(std::initializer_list<const char*> keys) const {
    if (!j_.is_object()) bad("expected an object");
    for (const auto& [k, v] : j_.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        throw ConfigError(path_ + "." + k, "unknown field");
    }
  }

 private:
  const Json& j_;
  std::string path_;
};

ModelSpec parse_model(const Node& n) {
  n.only({"kind", "dim", "chart_radius", "log_factor", "log_factor_polynomial"});
  ModelSpec m;
  const std::string kind = n.at("kind").string();
  if (kind == "euclidean") m.kind = SpaceFormKind::euclidean;
  else if (kind == "hyperbolic") m.kind = SpaceFormKind::hyperbolic;
  else if (kind == "spherical") m.kind = SpaceFormKind::spherical;
  else if (kind == "custom") m.kind = SpaceFormKind::custom;
  else n.at("kind").bad("unknown model kind '" + kind + "' (euclidean, hyperbolic, spherical, custom)");
  if (n.has("dim")) m.dim = n.at("dim").integer();
  if (m.dim != 2 && m.dim != 3) n.at("dim").bad("dimension must be 2 or 3");
  if (n.has("chart_radius")) {
    if (m.kind != SpaceFormKind::spherical) n.at("chart_radius").bad("only spherical models take a chart radius");
    m.chart_radius = n.at("chart_radius").number();
    if (!(m.chart_radius > 0.0)) n.at("chart_radius").bad("chart radius must be positive");
  }
  if (m.kind == SpaceFormKind::custom) {
    if (n.has("log_factor") == n.has("log_factor_polynomial"))
      n.bad("custom models need exactly one of log_factor or log_factor_polynomial");
    if (n.has("log_factor")) {
      m.log_factor = n.at("log_factor").string();
      try {
        (void)Expression::parse(m.log_factor, m.dim);
      } catch (const Error& e) {
        n.at("log_factor").bad(e.what());
      }
    } else {
      const Node table = n.at("log_factor_polynomial");
      if (!table.json().is_array() || table.json().empty()) table.bad("expected a non-empty array");
      for (std::size_t i = 0; i < table.json().size(); ++i) {
        const Node t = table.at(i);
        t.only({"exponents", "coefficient"});
        Expression::Monomial mono;
        for (double e : t.at("exponents").numbers()) {
          if (e < 0 || e != std::floor(e)) t.at("exponents").bad("exponents must be non-negative integers");
          mono.exponents.push_back(static_cast<int>(e));
        }
        if (static_cast<int>(mono.exponents.size()) != m.dim)
          t.at("exponents").bad("expected one exponent per dimension");
        int degree = 0;
        for (int e : mono.exponents) degree += e;
        if (degree > 6) t.at("exponents").bad("polynomial degree is limited to 6");
        mono.coefficient = t.at("coefficient").number();
        m.polynomial.push_back(mono);
      }
      m.log_factor = Expression::polynomial(m.polynomial, m.dim).source();
    }
  } else if (n.has("log_factor") || n.has("log_factor_polynomial")) {
    n.bad("only custom models take a log factor");
  }
  return m;
}

RadialProfile parse_profile(const Node& n, const ModelSpec& model) {
  const std::string type = n.at("type").string();
  if (type == "ellipse") {
    n.only({"type", "a", "b"});
    const double a = n.at("a").number(), b = n.at("b").number();
    if (!(a > 0.0 && b > 0.0)) n.bad("semi-axes must be positive");
    return RadialProfile::ellipse(a, b);
  }
  if (type == "geodesic_ball") {
    n.only({"type", "radius"});
    const double R = n.at("radius").number();
    if (!(R > 0.0)) n.at("radius").bad("radius must be positive");
    if (model.kind == SpaceFormKind::custom) n.bad("geodesic balls need a space-form model");
    return RadialProfile::circle(chart_radius_of_geodesic_ball(model.build(), R));
  }
  if (type == "fourier") {
    n.only({"type", "a0", "cos", "sin", "scale_by_geodesic_radius"});
    double scale = 1.0;
    if (n.has("scale_by_geodesic_radius")) {
      if (model.kind == SpaceFormKind::custom) n.bad("geodesic scaling needs a space-form model");
      scale = chart_radius_of_geodesic_ball(model.build(), n.at("scale_by_geodesic_radius").number());
    }
    std::vector<double> c = n.has("cos") ? n.at("cos").numbers() : std::vector<double>{};
    std::vector<double> s = n.has("sin") ? n.at("sin").numbers() : std::vector<double>{};
    if (c.size() > RadialProfile::kMaxHarmonic || s.size() > RadialProfile::kMaxHarmonic)
      n.bad("at most 8 harmonics are supported");
    for (double& v : c) v *= scale;
    for (double& v : s) v *= scale;
    return RadialProfile::fourier(scale * n.at("a0").number(), c, s);
  }
  n.at("type").bad("unknown profile type '" + type + "' (fourier, ellipse, geodesic_ball)");
}

FieldSource parse_source(const Node& n, bool allow_problem, bool allow_potential) {
  FieldSource s;
  if (n.json().is_string()) {
    const std::string v = n.string();
    if (v == "potential") {
      if (!allow_potential) n.bad("'potential' is only valid for V");
      s.kind = FieldSource::Kind::potential;
      return s;
    }
    n.bad("expected \"potential\" or an object with expression, random or problem");
  }
  n.only({"expression", "random", "problem", "boundary_value"});
  const int given = n.has("expression") + n.has("random") + n.has("problem");
  if (given != 1) n.bad("give exactly one of expression, random, problem");
  if (n.has("expression")) {
    s.kind = FieldSource::Kind::expression;
    s.expression = n.at("expression").string();
    try {
      (void)Expression::parse(s.expression, 2);
    } catch (const Error& e) {
      n.at("expression").bad(e.what());
    }
  } else if (n.has("random")) {
    const Node r = n.at("random");
    r.only({"degree", "seed", "offset", "amplitude"});
    s.kind = FieldSource::Kind::random;
    if (!r.has("seed")) throw ConfigError(r.path() + ".seed", "randomized fields need an explicit seed");
    s.random.seed = r.at("seed").unsigned_integer();
    if (r.has("degree")) s.random.degree = r.at("degree").integer();
    if (s.random.degree < 0 || s.random.degree > 6) r.at("degree").bad("degree must lie in [0, 6]");
    s.random.offset = r.number_or("offset", 0.0);
    s.random.amplitude = r.number_or("amplitude", 1.0);
  } else {
    if (!allow_problem) n.bad("only f can come from a boundary-value problem");
    s.kind = FieldSource::Kind::problem;
    s.problem = n.at("problem").string();
    if (s.problem != "weighted_hk" && s.problem != "cmc")
      n.at("problem").bad("unknown problem '" + s.problem + "' (weighted_hk, cmc)");
    s.boundary_value = n.number_or("boundary_value", s.problem == "cmc" ? 0.0 : 1.0);
  }
  if (n.has("boundary_value") && s.kind != FieldSource::Kind::problem)
    n.at("boundary_value").bad("boundary_value applies to problems only");
  return s;
}

Tolerances parse_tolerances(const Node& n) {
  n.only({"residual", "min_order", "roundoff_floor", "bulk_terms", "gap", "cmc", "solver",
          "rigidity_stability", "rigidity_floor", "curvature_bound"});
  Tolerances t;
  t.residual = n.number_or("residual", t.residual);
  t.min_order = n.number_or("min_order", t.min_order);
  t.roundoff_floor = n.number_or("roundoff_floor", t.roundoff_floor);
  t.bulk_terms = n.number_or("bulk_terms", t.bulk_terms);
  t.gap = n.number_or("gap", t.gap);
  t.cmc = n.number_or("cmc", t.cmc);
  t.solver = n.number_or("solver", t.solver);
  t.rigidity_stability = n.number_or("rigidity_stability", t.rigidity_stability);
  t.rigidity_floor = n.number_or("rigidity_floor", t.rigidity_floor);
  t.curvature_bound = n.number_or("curvature_bound", t.curvature_bound);
  if (!(t.solver > 0.0 && t.solver <= 1e-6)) n.at("solver").bad("solver tolerance must lie in (0, 1e-6]");
  return t;
}

Scenario parse_scenario(const Node& n) {
  n.only({"name", "description", "claim", "model", "domain", "suites", "levels", "field",
          "tolerances", "hk_mode", "rigidity_mode", "expect"});
  Scenario s;
  s.name = n.at("name").string();
  if (s.name.empty() ||
      !std::all_of(s.name.begin(), s.name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
      }))
    n.at("name").bad("names use letters, digits, '_', '-' and '.' only");
  if (n.has("description")) s.description = n.at("description").string();
  if (n.has("claim")) s.claim = n.at("claim").string();
  s.model = parse_model(n.at("model"));

  const Node d = n.at("domain");
  d.only({"profile", "base_rings"});
  s.domain.dim = s.model.dim;
  s.profile_echo = d.at("profile").json();
  s.domain.profile = parse_profile(d.at("profile"), s.model);
  if (d.has("base_rings")) s.domain.base_rings = d.at("base_rings").integer();
  if (s.domain.base_rings < 1 || s.domain.base_rings > 64) d.at("base_rings").bad("base_rings must lie in [1, 64]");

  const Node suites = n.at("suites");
  if (!suites.json().is_array() || suites.json().empty()) suites.bad("expected a non-empty array of suite names");
  for (std::size_t i = 0; i < suites.json().size(); ++i) {
    const std::string name = suites.at(i).string();
    if (name == "all") {
      for (Suite x : all_suites())
        if (std::find(s.suites.begin(), s.suites.end(), x) == s.suites.end()) s.suites.push_back(x);
      continue;
    }
    const auto suite = parse_suite(name);
    if (!suite) suites.at(i).bad("unknown suite '" + name + "' (valid: " + suite_list() + ")");
    if (std::find(s.suites.begin(), s.suites.end(), *suite) == s.suites.end()) s.suites.push_back(*suite);
  }

  const Node levels = n.at("levels");
  if (!levels.json().is_array() || levels.json().empty()) levels.bad("expected a non-empty array of levels");
  for (std::size_t i = 0; i < levels.json().size(); ++i) {
    const int l = levels.at(i).integer();
    if (l < 0 || l > 8) levels.at(i).bad("levels must lie in [0, 8]");
    if (!s.levels.empty() && l <= s.levels.back()) levels.at(i).bad("levels must be strictly increasing");
    s.levels.push_back(l);
  }

  if (n.has("field")) {
    const Node f = n.at("field");
    f.only({"f", "V", "K"});
    if (f.has("f")) s.field.f = parse_source(f.at("f"), true, false);
    if (f.has("V")) s.field.V = parse_source(f.at("V"), false, true);
    if (f.has("K")) s.field.K = f.at("K").number();
  }
  const bool identity = std::find(s.suites.begin(), s.suites.end(), Suite::reilly) != s.suites.end() ||
                        std::find(s.suites.begin(), s.suites.end(), Suite::classical_reilly) != s.suites.end();
  if (identity && !n.has("field")) n.bad("identity suites need a field specification");
  if (identity && s.field.f.kind == FieldSource::Kind::potential)
    n.at("field").bad("field.f is required for identity suites");
  if (s.model.kind == SpaceFormKind::custom && identity && !s.field.K)
    n.at("field").bad("custom models need an explicit K");

  if (n.has("tolerances")) s.tolerances = parse_tolerances(n.at("tolerances"));
  if (n.has("hk_mode")) {
    const std::string m = n.at("hk_mode").string();
    if (m == "inequality") s.hk_mode = HKMode::inequality;
    else if (m == "strict") s.hk_mode = HKMode::strict;
    else if (m == "equality") s.hk_mode = HKMode::equality;
    else n.at("hk_mode").bad("expected inequality, strict or equality");
  }
  if (n.has("rigidity_mode")) {
    const std::string m = n.at("rigidity_mode").string();
    if (m == "ball") s.rigidity_mode = RigidityMode::ball;
    else if (m == "perturbed") s.rigidity_mode = RigidityMode::perturbed;
    else n.at("rigidity_mode").bad("expected ball or perturbed");
  }
  if (n.has("expect")) {
    const std::string e = n.at("expect").string();
    if (e == "holds") s.expect = Expectation::holds;
    else if (e == "inconclusive") s.expect = Expectation::inconclusive;
    else if (e == "solver_failure") s.expect = Expectation::solver_failure;
    else n.at("expect").bad("expected holds, inconclusive or solver_failure");
  }
  return s;
}

}  // namespace

Json Scenario::echo() const {
  Json j;
  j["name"] = name;
  j["description"] = description;
  j["claim"] = claim;
  Json m;
  m["kind"] = std::string(sfw::to_string(model.kind));
  m["dim"] = model.dim;
  if (model.kind == SpaceFormKind::spherical) m["chart_radius"] = model.chart_radius;
  if (model.kind == SpaceFormKind::custom) m["log_factor"] = model.log_factor;
  j["model"] = m;
  j["domain"] = {{"profile", profile_echo}, {"base_rings", domain.base_rings}};
  Json suites = Json::array();
  for (Suite s : this->suites) suites.push_back(std::string(to_string(s)));
  j["suites"] = suites;
  j["levels"] = levels;
  Json f;
  f["f"] = source_echo(field.f);
  f["V"] = source_echo(field.V);
  if (field.K) f["K"] = *field.K;
  else f["K"] = "model curvature";
  j["field"] = f;
  j["tolerances"] = {{"residual", tolerances.residual},
                     {"min_order", tolerances.min_order},
                     {"roundoff_floor", tolerances.roundoff_floor},
                     {"bulk_terms", tolerances.bulk_terms},
                     {"gap", tolerances.gap},
                     {"cmc", tolerances.cmc},
                     {"solver", tolerances.solver},
                     {"rigidity_stability", tolerances.rigidity_stability},
                     {"rigidity_floor", tolerances.rigidity_floor},
                     {"curvature_bound", tolerances.curvature_bound}};
  j["hk_mode"] = std::string(to_string(hk_mode));
  j["rigidity_mode"] = std::string(to_string(rigidity_mode));
  j["expect"] = std::string(to_string(expect));
  return j;
}

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<Scenario> parse_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (const auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ConfigError("line " + std::to_string(line) + ", column " + std::to_string(col), what);
  }
  const Node root(doc, "$");
  root.only({"schema", "scenarios"});
  if (root.has("schema") && root.at("schema").string() != "sfw-config/1")
    root.at("schema").bad("unsupported schema (expected sfw-config/1)");
  const Node list = root.at("scenarios");
  if (!list.json().is_array()) list.bad("expected an array of scenarios");
  if (list.json().empty()) list.bad("scenario list is empty");
  std::vector<Scenario> out;
  for (std::size_t i = 0; i < list.json().size(); ++i) {
    Scenario s = parse_scenario(list.at(i));
    for (const Scenario& prev : out)
      if (prev.name == s.name) list.at(i).at("name").bad("duplicate scenario name '" + s.name + "'");
    out.push_back(std::move(s));
  }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sfw::cli
