#include "sfw_cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <thread>

#include "sfw/alexandrov.hpp"
#include "sfw/elliptic.hpp"
#include "sfw/error.hpp"
#include "sfw/heintze_karcher.hpp"
#include "sfw/reilly_identity.hpp"

namespace sfw::cli {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::verdict_failure: return "verdict_failure";
    case Outcome::numerical_failure: return "numerical_failure";
  }
  return "?";
}

std::vector<double> random_coefficients(const RandomPolynomial& p) {
  std::mt19937_64 rng(p.seed);
  const int count = (p.degree + 1) * (p.degree + 2) / 2;
  std::vector<double> c(static_cast<std::size_t>(count));
  for (double& v : c) v = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
  return c;
}

double eval_polynomial(const std::vector<double>& coeffs, int degree, double x, double y) {
  double sum = 0.0;
  std::size_t k = 0;
  for (int d = 0; d <= degree; ++d)
    for (int j = 0; j <= d; ++j) sum += coeffs[k++] * std::pow(x, d - j) * std::pow(y, j);
  return sum;
}

std::vector<Scenario> apply_overrides(std::vector<Scenario> scenarios, const RunOptions& opt) {
  std::vector<Scenario> out;
  for (Scenario& s : scenarios) {
    if (opt.suite) {
      if (std::find(s.suites.begin(), s.suites.end(), *opt.suite) == s.suites.end()) continue;
      s.suites = {*opt.suite};
    }
    if (opt.levels) {
      s.levels.clear();
      for (int l = opt.levels->first; l <= opt.levels->second; ++l) s.levels.push_back(l);
    }
    if (opt.seed) {
      s.field.f.random.seed = *opt.seed;
      s.field.V.random.seed = *opt.seed + 1;
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<double> column(const std::vector<TableRow>& rows, auto&& get) {
  std::vector<double> v;
  for (const TableRow& r : rows) v.push_back(get(r));
  return v;
}

void fill_orders(std::vector<TableRow>& rows, bool differences) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].order = nan;
    if (!differences && i >= 1 && rows[i].gap != 0.0 && rows[i - 1].gap != 0.0)
      rows[i].order = convergence_order(rows[i - 1].gap, rows[i].gap, rows[i - 1].h_max, rows[i].h_max);
    if (differences && i >= 2) {
      const double d1 = rows[i - 1].gap - rows[i - 2].gap, d2 = rows[i].gap - rows[i - 1].gap;
      if (d1 != 0.0 && d2 != 0.0)
        rows[i].order = convergence_order(d1, d2, rows[i - 1].h_max, rows[i].h_max);
    }
  }
}

/// Order column from the residual column.
void fill_residual_orders(std::vector<TableRow>& rows) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].order = nan;
    if (i >= 1 && rows[i].residual != 0.0 && rows[i - 1].residual != 0.0)
      rows[i].order =
          convergence_order(rows[i - 1].residual, rows[i].residual, rows[i - 1].h_max, rows[i].h_max);
  }
}

Claim equality_claim(const std::string& name, const std::vector<double>& h, std::vector<double> v,
                     const Tolerances& t, double threshold) {
  Claim c{name, equality_verdict(h, v, threshold, t.min_order, t.roundoff_floor), std::move(v)};
  return c;
}

class Pipeline {
 public:
  explicit Pipeline(const Scenario& s) : s_(s), model_(s.model.build()) {}

  ScenarioResult run() {
    ScenarioResult res;
    res.scenario = s_;
    try {
      timed(res, "mesh", [&] { build_meshes(); });
    } catch (const Error& e) {
      res.errors.push_back(block("mesh", e));
      finish(res);
      return res;
    }
    for (Suite suite : s_.suites) {
      try {
        SuiteResult sr;
        sr.suite = suite;
        timed(res, std::string(to_string(suite)), [&] { run_suite(sr); });
        res.suites.push_back(std::move(sr));
      } catch (const Error& e) {
        res.errors.push_back(block(std::string(to_string(suite)), e));
      }
    }
    finish(res);
    return res;
  }

 private:
  static ErrorBlock block(const std::string& suite, const Error& e) {
    const bool numerical = e.kind() == ErrorKind::indefinite || e.kind() == ErrorKind::iteration;
    return {suite, std::string(to_string(e.kind())), e.what(), numerical};
  }

  template <typename Fn>
  static void timed(ScenarioResult& res, const std::string& stage, Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    res.timings_ms.emplace_back(stage,
                                std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }

  void finish(ScenarioResult& res) const {
    const bool numerical = std::any_of(res.errors.begin(), res.errors.end(),
                                       [](const ErrorBlock& b) { return b.numerical; });
    if (s_.expect == Expectation::solver_failure) {
      if (numerical) return;
      res.outcome = Outcome::verdict_failure;
      res.failure = "expected a solver failure, none occurred";
      return;
    }
    if (numerical) {
      res.outcome = Outcome::numerical_failure;
      for (const ErrorBlock& b : res.errors)
        if (b.numerical) {
          res.failure = b.suite + ": " + b.message;
          break;
        }
      return;
    }
    if (!res.errors.empty()) {
      res.outcome = Outcome::verdict_failure;
      res.failure = res.errors.front().suite + ": " + res.errors.front().message;
      return;
    }
    for (const SuiteResult& sr : res.suites)
      for (const Claim& c : sr.claims) {
        const Verdict v = c.detail.verdict;
        const bool ok = v == Verdict::holds ||
                        (v == Verdict::inconclusive && s_.expect == Expectation::inconclusive);
        if (!ok) {
          res.outcome = Outcome::verdict_failure;
          res.failure = std::string(to_string(sr.suite)) + "." + c.name + " " +
                        std::string(sfw::to_string(v)) + " (" + c.detail.reason + ")";
          return;
        }
      }
  }

  void build_meshes() {
    StarDomainSpec spec = s_.domain;
    spec.level = s_.levels.front();
    meshes_.push_back(std::make_unique<DomainMesh>(build_mesh(spec, model_)));
    for (std::size_t i = 1; i < s_.levels.size(); ++i) {
      DomainMesh m = *meshes_.back();
      for (int l = s_.levels[i - 1]; l < s_.levels[i]; ++l) m = refine(m);
      meshes_.push_back(std::make_unique<DomainMesh>(std::move(m)));
    }
  }

  std::vector<double> hs() const {
    std::vector<double> h;
    for (const auto& m : meshes_) h.push_back(m->h_max());
    return h;
  }

  DirichletProblem problem(const DomainMesh& mesh, const FieldSource& src) const {
    DirichletProblem p = src.problem == "cmc" ? DirichletProblem::constant_mean_curvature(mesh)
                                              : DirichletProblem::weighted_heintze_karcher(
                                                    mesh, src.boundary_value);
    if (src.problem == "cmc") p.bdry = src.boundary_value;
    p.tolerance = s_.tolerances.solver;
    return p;
  }

  ScalarField sample(const DomainMesh& mesh, const FieldSource& src) const {
    switch (src.kind) {
      case FieldSource::Kind::expression:
        return ScalarField::sample(mesh, Expression::parse(src.expression, 2));
      case FieldSource::Kind::random: {
        const std::vector<double> c = random_coefficients(src.random);
        const RandomPolynomial p = src.random;
        return ScalarField::sample(mesh, [&](const Vec2& x) {
          return p.offset + p.amplitude * eval_polynomial(c, p.degree, x.x(), x.y());
        });
      }
      case FieldSource::Kind::problem: return solve_dirichlet(problem(mesh, src)).solution;
      case FieldSource::Kind::potential: break;
    }
    fail(ErrorKind::usage, "field source cannot be sampled");
  }

  void run_suite(SuiteResult& sr) {
    switch (sr.suite) {
      case Suite::reilly: reilly(sr, false); break;
      case Suite::classical_reilly: reilly(sr, true); break;
      case Suite::hk: hk(sr, false); break;
      case Suite::brendle: hk(sr, true); break;
      case Suite::minkowski: minkowski(sr); break;
      case Suite::alexandrov: alexandrov(sr); break;
      case Suite::rigidity: rigidity(sr); break;
    }
  }

  void reilly(SuiteResult& sr, bool classical) {
    const Tolerances& t = s_.tolerances;
    double K = 0.0;
    if (classical) {
      if (model_.kind() != SpaceFormKind::euclidean)
        fail(ErrorKind::unsupported, "the classical identity is stated in euclidean space");
      if (s_.field.V.kind != FieldSource::Kind::potential)
        fail(ErrorKind::unsupported, "the classical identity has V = 1");
    } else {
      K = s_.field.K ? *s_.field.K : model_.curvature();
    }
    sr.term_names = {"T_lhs", "B1", "B2", "T3", "T4", "scale"};
    double worst_bulk = 0.0;
    std::vector<double> bulk_ratio;
    for (const auto& mp : meshes_) {
      const DomainMesh& mesh = *mp;
      const ScalarField f = sample(mesh, s_.field.f);
      const ReillyReport r = [&] {
        if (s_.field.V.kind == FieldSource::Kind::potential)
          return reilly_residual(mesh, model_, f, SpaceFormPotential{}, K);
        if (s_.field.V.kind == FieldSource::Kind::expression)
          return reilly_residual(mesh, model_, f, Expression::parse(s_.field.V.expression, 2), K);
        return reilly_residual(mesh, model_, f, sample(mesh, s_.field.V), K);
      }();
      sr.rows.push_back({mesh.level(), mesh.h_max(), {r.T_lhs, r.B1, r.B2, r.T3, r.T4, r.scale},
                         r.relative_residual, std::numeric_limits<double>::quiet_NaN(), 0.0});
      const double ratio = std::max(std::abs(r.T3), std::abs(r.T4)) / r.scale;
      bulk_ratio.push_back(ratio);
      worst_bulk = std::max(worst_bulk, ratio);
    }
    fill_residual_orders(sr.rows);
    sr.notes["K"] = K;
    sr.claims.push_back(equality_claim("identity_residual", hs(),
                                       column(sr.rows, [](const TableRow& r) { return r.residual; }),
                                       t, t.residual));
    const bool matched = s_.field.V.kind == FieldSource::Kind::potential && model_.is_space_form() &&
                         K == model_.curvature();
    if (matched) {
      Claim c{"bulk_terms_vanish", {}, bulk_ratio};
      c.detail.finest = bulk_ratio.back();
      c.detail.order = 0.0;
      c.detail.extrapolation.value = worst_bulk;
      if (worst_bulk <= t.bulk_terms) {
        c.detail.verdict = Verdict::holds;
        c.detail.reason = "max(|T3|, |T4|) / scale within bound at every level";
      } else {
        c.detail.verdict = Verdict::violated;
        c.detail.reason = "bulk terms exceed the analytic-vanishing bound";
      }
      sr.claims.push_back(std::move(c));
    }
  }

  void hk(SuiteResult& sr, bool brendle) {
    const Tolerances& t = s_.tolerances;
    sr.term_names = {"lhs", "rhs_bulk", "rhs_flux", "alt_rhs", "min_H", "min_V_boundary"};
    bool precondition = true;
    std::string note;
    std::vector<double> flux;
    Json screens = Json::array();
    for (const auto& mp : meshes_) {
      const DomainMesh& mesh = *mp;
      const HKReport r = brendle ? brendle_spherical(mesh, model_)
                                 : heintze_karcher(mesh, model_, t.curvature_bound);
      sr.rows.push_back({mesh.level(), mesh.h_max(),
                         {r.lhs, r.rhs_bulk, r.rhs_flux, r.alt_rhs, r.min_H, r.min_V_boundary},
                         r.flux_vs_bulk, r.gap, 0.0});
      flux.push_back(r.flux_vs_bulk);
      if (!r.precondition_met) {
        precondition = false;
        note = r.precondition_note;
      }
      if (r.screen)
        screens.push_back({{"level", mesh.level()},
                           {"min_curvature", r.screen->min_curvature},
                           {"bound", r.screen->bound},
                           {"passed", r.screen->passed},
                           {"excluded_measure", r.excluded_measure}});
      sr.notes["gap_reference"] =
          r.reference == HKReference::bulk_laplacian ? "rhs_bulk" : "alt_rhs";
    }
    fill_orders(sr.rows, s_.hk_mode != HKMode::equality);
    if (!screens.empty()) sr.notes["curvature_screen"] = screens;
    const TableRow& fin = sr.rows.back();
    // Empirical sign of lhs - n int V (recorded, not a verdict).
    sr.notes["lhs_minus_alt_rhs_sign"] = fin.terms[0] - fin.terms[3] >= 0.0 ? "nonnegative" : "negative";
    if (brendle) sr.notes["rhs_relation"] = "rhs_bulk = -alt_rhs (Lap V = -n V)";
    sr.notes["precondition_violated"] = !precondition;
    const std::vector<double> h = hs();
    const std::vector<double> gaps = column(sr.rows, [](const TableRow& r) { return r.gap; });
    if (!precondition) {
      Claim c{"precondition", {}, column(sr.rows, [](const TableRow& r) { return r.terms[4]; })};
      c.detail.verdict = Verdict::inconclusive;
      c.detail.reason = "precondition violated: " + note;
      c.detail.finest = fin.terms[4];
      sr.claims.push_back(std::move(c));
      return;
    }
    if (s_.hk_mode == HKMode::equality) {
      sr.claims.push_back(equality_claim("equality", h, gaps, t, t.gap));
    } else {
      Claim c{s_.hk_mode == HKMode::strict ? "strict_inequality" : "inequality",
              inequality_verdict(h, gaps, s_.hk_mode == HKMode::strict, t.gap), gaps};
      sr.claims.push_back(std::move(c));
    }
    sr.claims.push_back(equality_claim("flux_vs_bulk", h, flux, t, t.residual));
  }

  void minkowski(SuiteResult& sr) {
    const Tolerances& t = s_.tolerances;
    sr.term_names = {"V_area", "Hp_area", "p_area", "n_V_volume", "first_discrepancy",
                     "second_discrepancy"};
    for (const auto& mp : meshes_) {
      const MinkowskiReport r = minkowski_check(*mp, model_);
      sr.rows.push_back({mp->level(), mp->h_max(),
                         {r.V_area, r.Hp_area, r.p_area, r.n_V_volume, r.first_discrepancy,
                          r.second_discrepancy},
                         std::max(std::abs(r.first_discrepancy), std::abs(r.second_discrepancy)),
                         std::numeric_limits<double>::quiet_NaN(), 0.0});
    }
    fill_residual_orders(sr.rows);
    const std::vector<double> h = hs();
    sr.claims.push_back(equality_claim("first_minkowski", h,
                                       column(sr.rows, [](const TableRow& r) { return r.terms[4]; }),
                                       t, t.residual));
    sr.claims.push_back(equality_claim("divergence_identity", h,
                                       column(sr.rows, [](const TableRow& r) { return r.terms[5]; }),
                                       t, t.residual));
  }

  void alexandrov(SuiteResult& sr) {
    const Tolerances& t = s_.tolerances;
    sr.term_names = {"H_mean", "H_max_deviation", "slack_32", "holder_slack", "green_discrepancy",
                     "minkowski_discrepancy", "obata_residual"};
    std::vector<AlexandrovReport> reps;
    for (const auto& mp : meshes_) reps.push_back(alexandrov_chain(*mp, model_, t.cmc));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const AlexandrovReport& r = reps[i];
      TableRow row{meshes_[i]->level(), meshes_[i]->h_max(), {r.H_mean, r.H_max_deviation}, nan, nan, nan};
      if (r.chain) {
        const AlexandrovChain& c = *r.chain;
        row.terms.insert(row.terms.end(), {c.slack_32, c.holder_slack, c.green_discrepancy,
                                           c.minkowski_discrepancy, c.obata_residual});
        row.residual = std::max({std::abs(c.slack_32), std::abs(c.holder_slack),
                                 std::abs(c.green_discrepancy), std::abs(c.minkowski_discrepancy),
                                 std::abs(c.obata_residual)});
      } else {
        row.terms.insert(row.terms.end(), 5, nan);
      }
      sr.rows.push_back(row);
    }
    fill_residual_orders(sr.rows);
    if (!reps.back().cmc) {
      sr.notes["not_cmc"] = true;
      Claim c{"cmc_screen", {}, column(sr.rows, [](const TableRow& r) { return r.terms[1]; })};
      c.detail.verdict = Verdict::inconclusive;
      c.detail.reason = "not_cmc: relative H deviation exceeds the CMC tolerance; chain skipped";
      c.detail.finest = reps.back().H_max_deviation;
      sr.claims.push_back(std::move(c));
      return;
    }
    sr.notes["not_cmc"] = false;
    std::vector<double> h;
    std::vector<std::vector<double>> links(5);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (!reps[i].chain) continue;
      h.push_back(meshes_[i]->h_max());
      for (std::size_t k = 0; k < 5; ++k) links[k].push_back(sr.rows[i].terms[2 + k]);
    }
    static const char* names[] = {"schwarz_slack", "holder_slack", "green_identity",
                                  "minkowski_identity", "obata_residual"};
    for (std::size_t k = 0; k < 5; ++k)
      sr.claims.push_back(equality_claim(names[k], h, links[k], t, t.residual));
  }

  void rigidity(SuiteResult& sr) {
    const Tolerances& t = s_.tolerances;
    sr.term_names = {"obata_raw", "bulk_schwarz", "boundary_expression", "schwarz_slack", "c"};
    const double c = s_.field.f.kind == FieldSource::Kind::problem ? s_.field.f.boundary_value : 1.0;
    for (const auto& mp : meshes_) {
      DirichletProblem p = DirichletProblem::weighted_heintze_karcher(*mp, c);
      p.tolerance = t.solver;
      const SolveReport sol = solve_dirichlet(p);
      const RigidityReport r = rigidity_residual(*mp, model_, sol);
      sr.rows.push_back({mp->level(), mp->h_max(),
                         {r.obata_raw, r.bulk_schwarz, r.boundary_expression, r.schwarz_slack, r.c},
                         r.obata_residual, std::numeric_limits<double>::quiet_NaN(), 0.0});
    }
    fill_residual_orders(sr.rows);
    std::vector<double> res = column(sr.rows, [](const TableRow& r) { return r.residual; });
    if (s_.rigidity_mode == RigidityMode::ball) {
      sr.claims.push_back(equality_claim("obata_residual", hs(), res, t, t.residual));
      return;
    }
    Claim cl{"rigidity_violation_stable", {}, res};
    const auto [lo, hi] = std::minmax_element(res.begin(), res.end());
    cl.detail.finest = res.back();
    cl.detail.extrapolation = richardson(hs(), res, 1.0);
    const double spread = (*hi - *lo) / *lo;
    if (*lo >= t.rigidity_floor && spread <= t.rigidity_stability) {
      cl.detail.verdict = Verdict::holds;
      cl.detail.reason = "residual bounded below and stable across levels";
    } else {
      cl.detail.verdict = Verdict::inconclusive;
      cl.detail.reason = *lo < t.rigidity_floor ? "residual below the rigidity floor"
                                                : "residual not stable across levels";
    }
    sr.notes["relative_spread"] = spread;
    sr.claims.push_back(std::move(cl));
  }

  const Scenario& s_;
  SpaceFormModel model_;
  std::vector<std::unique_ptr<DomainMesh>> meshes_;
};

}  // namespace

ScenarioResult run_scenario(const Scenario& s) { return Pipeline(s).run(); }

std::vector<ScenarioResult> run_all(const std::vector<Scenario>& scenarios, int jobs) {
  std::vector<ScenarioResult> results(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) results[i] = run_scenario(scenarios[i]);
  };
  const int n = std::clamp(jobs, 1, std::max(1, static_cast<int>(scenarios.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(results.begin(), results.end(), [](const ScenarioResult& a, const ScenarioResult& b) {
    return a.scenario.name < b.scenario.name;
  });
  return results;
}

}  // namespace sfw::cli
