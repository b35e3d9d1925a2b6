#include <cmath>
#include <random>

#include "doctest.h"
#include "sfw/alexandrov.hpp"
#include "sfw/convergence.hpp"
#include "sfw/curvature_screen.hpp"
#include "sfw/eikonal.hpp"
#include "sfw/field_eval.hpp"
#include "sfw/elliptic.hpp"
#include "sfw/error.hpp"
#include "sfw/heintze_karcher.hpp"
#include "sfw/reilly_identity.hpp"
#include "support.hpp"

using namespace sfw;
using namespace sfw::testing;

namespace {

const double kEllipseGap = 0.3817035074;
const double kHyperbolicPerturbedGap = 0.4420174211;
const double kSphericalPerturbedGap = 0.1387735814;

/// Degree-3 polynomial with coefficients uniform in [-1, 1].
Expression random_cubic(std::uint64_t seed, double offset) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Expression::Monomial> terms;
  for (int d = 0; d <= 3; ++d)
    for (int j = 0; j <= d; ++j) terms.push_back({{d - j, j}, u(rng) + (d == 0 ? offset : 0.0)});
  return Expression::polynomial(terms, 2);
}

SpaceFormModel saddle_model() { return SpaceFormModel::custom(2, Expression::parse("0.1*(x1^2 - x2^2)", 2)); }

template <class F>
std::pair<std::vector<double>, std::vector<double>> sweep(int l0, int l1, F&& per_level) {
  std::vector<double> h, v;
  for (int l = l0; l <= l1; ++l) {
    const auto [hl, vl] = per_level(l);
    h.push_back(hl);
    v.push_back(vl);
  }
  return {h, v};
}

}  // namespace

TEST_CASE("classical reilly identity on the unit disk") {
  const SpaceFormModel e2 = SpaceFormModel::euclidean(2);
  std::vector<double> rel;
  for (int l = 1; l <= 3; ++l) {
    const DomainMesh m = disk(e2, 1.0, l);
    const SolveReport s = solve_dirichlet(DirichletProblem::shifted(m, 0.0, -1.0, 0.0));
    const ReillyReport r = reilly_residual(m, e2, s.solution, Expression::constant(1.0, 2), 0.0);
    CHECK(r.T3 == 0.0);
    CHECK(r.T4 == 0.0);
    CHECK(r.relative_residual == doctest::Approx(r.residual / r.scale));
    rel.push_back(std::abs(r.relative_residual));
  }
  CHECK(rel[2] < 2e-2);
  CHECK(rel[1] < 0.6 * rel[0]);
  CHECK(rel[2] < 0.6 * rel[1]);
}

TEST_CASE("bulk terms vanish for the space-form potential") {
  for (const SpaceFormModel& model : {SpaceFormModel::hyperbolic(2), SpaceFormModel::spherical(2)}) {
    const double K = model.curvature();
    for (int l = 1; l <= 3; ++l) {
      const DomainMesh m = star(model, perturbed(0.45, 0.1, 2), l);
      const ScalarField f = ScalarField::sample(m, [](const Vec2& x) { return std::sin(x.x()) * std::exp(x.y()) + x.x() * x.y(); });
      const ReillyReport r = reilly_residual(m, model, f, SpaceFormPotential{}, K);
      CHECK(std::abs(r.T3) < 1e-8 * r.scale);
      CHECK(std::abs(r.T4) < 1e-8 * r.scale);
    }
  }
}

TEST_CASE("weighted reilly identity for the solved fields converges") {
  struct Case {
    SpaceFormModel model;
    bool cmc;
  };
  for (const Case& c : {Case{SpaceFormModel::hyperbolic(2), false}, Case{SpaceFormModel::spherical(2), true}}) {
    const double K = c.model.curvature();
    const auto [h, rel] = sweep(2, 4, [&](int l) {
      const DomainMesh m = star(c.model, perturbed(0.4, 0.15, 2), l);
      const SolveReport s = solve_dirichlet(c.cmc ? DirichletProblem::constant_mean_curvature(m)
                                                  : DirichletProblem::weighted_heintze_karcher(m, 1.0));
      const ReillyReport r = reilly_residual(m, c.model, s.solution, SpaceFormPotential{}, K);
      return std::pair{m.h_max(), std::abs(r.relative_residual)};
    });
    CHECK(rel[2] < 5e-2);
    CHECK(order(rel[0], rel[2], h[0], h[2]) >= 1.0);
  }
}

TEST_CASE("reilly identity for random data on a custom metric") {
  const SpaceFormModel model = saddle_model();
  for (std::uint64_t seed : {7u, 21u}) {
    const Expression fe = random_cubic(seed, 0.0), Ve = random_cubic(seed + 1, 2.0);
    const auto [h, rel] = sweep(1, 4, [&](int l) {
      const DomainMesh m = star(model, perturbed(0.5, 0.1, 2), l);
      const ReillyReport r = reilly_residual(m, model, ScalarField::sample(m, fe), ScalarField::sample(m, Ve), 0.3);
      return std::pair{m.h_max(), std::abs(r.relative_residual)};
    });
    CHECK(rel[3] < rel[0]);
    CHECK(rel[3] < 5e-2);
    CHECK(overall_order(h, rel) >= 1.0);
  }
}

TEST_CASE("reilly report scales quadratically with f") {
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const DomainMesh m = star(hyp, perturbed(0.5, 0.1, 3), 2);
  const ScalarField f = ScalarField::sample(m, [](const Vec2& x) { return 1.0 + x.x() - x.y() * x.y(); });
  const ScalarField V = ScalarField::sample(m, [](const Vec2& x) { return 2.0 + std::cos(x.x() + x.y()); });
  const double alpha = 3.25;
  const ScalarField g = ScalarField::combine(alpha, f, 0.0, f);
  const ReillyReport a = reilly_residual(m, hyp, f, V, -1.0), b = reilly_residual(m, hyp, g, V, -1.0);
  const double a2 = alpha * alpha;
  CHECK(b.T_lhs == doctest::Approx(a2 * a.T_lhs).epsilon(1e-12));
  CHECK(b.B1 == doctest::Approx(a2 * a.B1).epsilon(1e-12));
  CHECK(b.B2 == doctest::Approx(a2 * a.B2).epsilon(1e-12));
  CHECK(b.T3 == doctest::Approx(a2 * a.T3).epsilon(1e-12));
  CHECK(b.T4 == doctest::Approx(a2 * a.T4).epsilon(1e-12));
  CHECK(b.relative_residual == doctest::Approx(a.relative_residual).epsilon(1e-10));
}

TEST_CASE("a constant weight reproduces the analytic euclidean potential") {
  const SpaceFormModel e2 = SpaceFormModel::euclidean(2);
  const DomainMesh m = star(e2, RadialProfile::ellipse(1.0, 0.8), 2);
  const ScalarField f = ScalarField::sample(m, [](const Vec2& x) { return x.x() * x.x() * x.y(); });
  const ReillyReport a = reilly_residual(m, e2, f, SpaceFormPotential{}, 0.0);
  const ReillyReport b = reilly_residual(m, e2, f, Expression::constant(1.0, 2), 0.0);
  CHECK(a.T_lhs == doctest::Approx(b.T_lhs).epsilon(1e-13));
  CHECK(a.B1 == doctest::Approx(b.B1).epsilon(1e-13));
}

TEST_CASE("three-dimensional domains are unsupported") {
  StarDomainSpec s;
  s.dim = 3;
  try {
    (void)build_mesh(s, SpaceFormModel::euclidean(3));
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
}

TEST_CASE("heintze-karcher equality on the euclidean unit disk") {
  const SpaceFormModel e2 = SpaceFormModel::euclidean(2);
  const HKReport r = heintze_karcher(disk(e2, 1.0, 3), e2);
  CHECK(r.precondition_met);
  CHECK(r.reference == HKReference::n_volume);
  CHECK(r.lhs == doctest::Approx(2 * pi).epsilon(1e-5));
  CHECK(r.alt_rhs == doctest::Approx(2 * pi).epsilon(2e-3));
  CHECK(std::abs(r.gap) < 1e-2);
  CHECK(r.rhs_bulk == 0.0);
}

TEST_CASE("heintze-karcher equality on a hyperbolic geodesic ball") {
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const double target = 2 * pi * std::sinh(0.7) * std::sinh(0.7);
  CHECK(target == doctest::Approx(3.6157).epsilon(1e-4));
  const auto [h, gaps] = sweep(2, 4, [&](int l) {
    const HKReport r = heintze_karcher(disk(hyp, chart_radius_of_geodesic_ball(hyp, 0.7), l), hyp);
    if (l == 3) {
      CHECK(r.lhs == doctest::Approx(target).epsilon(5e-3));
      CHECK(r.rhs_bulk == doctest::Approx(target).epsilon(5e-3));
      CHECK(r.rhs_flux == doctest::Approx(target).epsilon(5e-3));
    }
    CHECK(r.reference == HKReference::bulk_laplacian);
    return std::pair{r.h_max, r.gap};
  });
  const Extrapolation ex = richardson(h, gaps, 2.0);
  CHECK(std::abs(ex.value) < 1e-3);
  CHECK(std::abs(gaps[2]) < std::abs(gaps[0]));
}

TEST_CASE("strict heintze-karcher gaps on perturbed domains") {
  struct Case {
    SpaceFormModel model;
    RadialProfile profile;
    double oracle;
    bool brendle;
  };
  const Case cases[] = {
      {SpaceFormModel::euclidean(2), RadialProfile::ellipse(1.0, 0.8), kEllipseGap, false},
      {SpaceFormModel::hyperbolic(2), perturbed(std::tanh(0.35), 0.15, 2), kHyperbolicPerturbedGap, false},
      {SpaceFormModel::spherical(2), perturbed(std::tan(0.25), 0.1, 2), kSphericalPerturbedGap, true},
  };
  for (const Case& c : cases) {
    const auto [h, gaps] = sweep(2, 4, [&](int l) {
      const DomainMesh m = star(c.model, c.profile, l);
      const HKReport r = c.brendle ? brendle_spherical(m, c.model) : heintze_karcher(m, c.model);
      CHECK(r.precondition_met);
      return std::pair{r.h_max, r.gap};
    });
    const VerdictDetail v = inequality_verdict(h, gaps, true, 1e-3);
    CHECK(v.verdict == Verdict::holds);
    CHECK(v.extrapolation.value > 3.0 * v.extrapolation.error_estimate);
    CHECK(gaps[2] == doctest::Approx(c.oracle).epsilon(1e-2));
  }
}

TEST_CASE("non-mean-convex boundaries carry no inequality claim") {
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const HKReport r = heintze_karcher(star(hyp, perturbed(0.4, 0.3, 3), 2), hyp);
  CHECK(r.min_H <= 0.0);
  CHECK_FALSE(r.precondition_met);
  CHECK_FALSE(r.precondition_note.empty());
  const SpaceFormModel sph = SpaceFormModel::spherical(2);
  const HKReport b = brendle_spherical(star(sph, perturbed(std::tan(0.25), 0.1, 3), 3), sph);
  CHECK(b.min_H <= 0.0);
  CHECK_FALSE(b.precondition_met);
}

TEST_CASE("brendle form on a spherical geodesic ball") {
  const SpaceFormModel sph = SpaceFormModel::spherical(2);
  const double target = 2 * pi * std::sin(0.5) * std::sin(0.5);
  CHECK(target == doctest::Approx(1.4442).epsilon(1e-4));
  const HKReport r = brendle_spherical(disk(sph, chart_radius_of_geodesic_ball(sph, 0.5), 3), sph);
  CHECK(r.precondition_met);
  CHECK(r.reference == HKReference::n_volume);
  CHECK(r.lhs == doctest::Approx(target).epsilon(5e-3));
  CHECK(r.alt_rhs == doctest::Approx(target).epsilon(5e-3));
  CHECK(r.rhs_bulk == -r.alt_rhs);
}

TEST_CASE("domains reaching the equator fail the brendle precondition") {
  const SpaceFormModel sph = SpaceFormModel::spherical(2);
  const HKReport r = brendle_spherical(disk(sph, 0.999, 2), sph);
  CHECK(r.min_V_boundary < 1e-2);
  CHECK_FALSE(r.precondition_met);
  CHECK_THROWS_AS((void)brendle_spherical(disk(SpaceFormModel::hyperbolic(2), 0.5, 0), SpaceFormModel::hyperbolic(2)), Error);
}

TEST_CASE("minkowski identities") {
  const SpaceFormModel e2 = SpaceFormModel::euclidean(2);
  const MinkowskiReport d = minkowski_check(disk(e2, 1.0, 3), e2);
  CHECK(d.p_area == doctest::Approx(2 * pi).epsilon(1e-5));
  CHECK(d.n_V_volume == doctest::Approx(2 * pi).epsilon(2e-3));

  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const MinkowskiReport b = minkowski_check(disk(hyp, chart_radius_of_geodesic_ball(hyp, 0.7), 3), hyp);
  const double target = 2 * pi * std::sinh(0.7) * std::sinh(0.7);
  CHECK(b.p_area == doctest::Approx(target).epsilon(5e-3));
  CHECK(b.n_V_volume == doctest::Approx(target).epsilon(5e-3));
  // n int cosh r = 2 pi int_0^R 2 sinh t cosh t dt = pi (cosh 2R - 1).
  CHECK(pi * (std::cosh(1.4) - 1.0) == doctest::Approx(target).epsilon(1e-12));

  for (const SpaceFormModel& model : {e2, hyp, SpaceFormModel::spherical(2)}) {
    std::vector<double> h, first, second;
    for (int l = 2; l <= 4; ++l) {
      const MinkowskiReport r = minkowski_check(star(model, RadialProfile::ellipse(0.6, 0.4), l), model);
      h.push_back(r.h_max);
      first.push_back(std::abs(r.first_discrepancy));
      second.push_back(std::abs(r.second_discrepancy));
    }
    CHECK(converges_with_order(h, first, 1.0, 1e-12));
    CHECK(converges_with_order(h, second, 1.0, 1e-12));
  }
  CHECK_THROWS_AS((void)minkowski_check(disk(saddle_model(), 0.5, 0), saddle_model()), Error);
}

TEST_CASE("alexandrov chain on geodesic circles") {
  for (const SpaceFormModel& model : {SpaceFormModel::hyperbolic(2), SpaceFormModel::spherical(2), SpaceFormModel::euclidean(2)}) {
    const double R = model.kind() == SpaceFormKind::euclidean ? 1.0 : 0.7;
    std::vector<double> h, green, mink, holder, obata;
    for (int l = 2; l <= 4; ++l) {
      const AlexandrovReport r = alexandrov_chain(disk(model, chart_radius_of_geodesic_ball(model, R), l), model);
      REQUIRE(r.cmc);
      REQUIRE(r.chain.has_value());
      h.push_back(r.h_max);
      green.push_back(std::abs(r.chain->green_discrepancy));
      mink.push_back(std::abs(r.chain->minkowski_discrepancy));
      holder.push_back(std::abs(r.chain->holder_slack));
      obata.push_back(r.chain->obata_residual);
      CHECK(r.chain->slack_32 > -1e-3);
    }
    for (const auto* seq : {&green, &mink, &holder, &obata}) {
      CHECK(converges_with_order(h, *seq, 0.8, 1e-12));
      CHECK(seq->back() < 5e-2);
    }
  }
}

TEST_CASE("the ellipse fails the constant mean curvature screen") {
  const SpaceFormModel e2 = SpaceFormModel::euclidean(2);
  const AlexandrovReport r = alexandrov_chain(star(e2, RadialProfile::ellipse(1.0, 0.8), 3), e2);
  CHECK_FALSE(r.cmc);
  CHECK_FALSE(r.chain.has_value());
  CHECK(r.H_max_deviation > 0.1);
  CHECK(r.H_mean > 0.0);
  CHECK_THROWS_AS((void)alexandrov_chain(disk(saddle_model(), 0.5, 0), saddle_model()), Error);
}

TEST_CASE("rigidity residual separates balls from perturbed balls") {
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  auto residual = [&](const RadialProfile& p, int l) {
    const DomainMesh m = star(hyp, p, l);
    return rigidity_residual(m, hyp, solve_dirichlet(DirichletProblem::weighted_heintze_karcher(m, 1.0)));
  };
  const RadialProfile ball = RadialProfile::circle(std::tanh(0.35));
  const RadialProfile bumped = perturbed(std::tanh(0.35), 0.15, 2);
  std::vector<double> h, b, p;
  for (int l = 2; l <= 4; ++l) {
    const RigidityReport rb = residual(ball, l), rp = residual(bumped, l);
    CHECK(rb.c == 1.0);
    h.push_back(rb.h_max);
    b.push_back(rb.obata_residual);
    p.push_back(rp.obata_residual);
  }
  CHECK(b[1] < 5e-2);
  CHECK(converges_with_order(h, b, 1.0, 1e-12));
  CHECK(p[1] > 10.0 * b[1]);
  const double lo = *std::min_element(p.begin(), p.end()), hi = *std::max_element(p.begin(), p.end());
  CHECK(hi / lo < 1.2);
  const DomainMesh e = disk(SpaceFormModel::euclidean(2), 1.0, 1);
  try {
    (void)rigidity_residual(e, e.model(), solve_dirichlet(DirichletProblem::weighted_heintze_karcher(e, 1.0)));
    FAIL("expected unsupported");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::unsupported);
  }
}

TEST_CASE("eikonal distance for flat and poincare factors") {
  const SpaceFormModel flat = SpaceFormModel::custom(2, Expression::constant(0.0, 2));
  const SpaceFormModel poincare = SpaceFormModel::custom(2, Expression::parse("log(2/(1 - r2))", 2));
  auto max_err = [](const EikonalResult& r, auto&& exact) {
    double e = 0.0;
    for (std::size_t v = 0; v < r.distance.size(); ++v)
      e = std::max(e, std::abs(r.distance[v] - exact(r.distance.mesh().vertices()[v])));
    return e;
  };
  std::vector<double> h, ef, ep;
  for (int l = 1; l <= 4; ++l) {
    const DomainMesh mf = disk(flat, 0.8, l), mp = disk(poincare, 0.6, l);
    const EikonalResult rf = eikonal_distance(mf, flat), rp = eikonal_distance(mp, poincare);
    CHECK(rf.accepted == static_cast<int>(mf.vertex_count()));
    h.push_back(mp.h_max());
    ef.push_back(max_err(rf, [](const Vec2& x) { return x.norm(); }));
    ep.push_back(max_err(rp, [](const Vec2& x) { return 2.0 * std::atanh(x.norm()); }));
  }
  CHECK(ef[3] < 1e-2);
  CHECK(ep[3] < 1e-2);
  CHECK(overall_order(h, ep) >= 0.8);
}

TEST_CASE("eikonal gradient defect vanishes under refinement") {
  const SpaceFormModel model = saddle_model();
  std::vector<double> h, defect;
  for (int l = 1; l <= 4; ++l) {
    const DomainMesh m = star(model, perturbed(0.5, 0.1, 2), l);
    const EikonalResult r = eikonal_distance(m, model);
    CHECK(r.cut_suspects.empty());
    CHECK(r.suspect_measure == 0.0);
    h.push_back(m.h_max());
    defect.push_back(r.max_gradient_defect);
  }
  CHECK(defect[3] < defect[0]);
  CHECK(defect[3] < 2e-2);
}

TEST_CASE("curvature screen") {
  const DomainMesh base = disk(SpaceFormModel::euclidean(2), 0.6, 2);
  auto screen = [&](const std::string& phi) {
    const SpaceFormModel m = SpaceFormModel::custom(2, Expression::parse(phi, 2));
    return curvature_screen(disk(m, 0.6, 2), m);
  };
  const CurvatureScreen hyp = screen("log(2/(1 - r2))");
  CHECK(hyp.passed);
  CHECK(hyp.min_curvature == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(hyp.max_curvature == doctest::Approx(-1.0).epsilon(1e-8));
  const CurvatureScreen flat = screen("0");
  CHECK(flat.passed);
  CHECK(flat.min_curvature == 0.0);
  const CurvatureScreen bowl = screen("-0.5*r2");
  CHECK(bowl.passed);
  CHECK(bowl.min_curvature == doctest::Approx(2.0));
  // phi = r^2 / 2 has curvature -2 exp(-r^2), below -1 near the origin.
  const CurvatureScreen steep = screen("0.5*r2");
  CHECK_FALSE(steep.passed);
  CHECK(steep.min_curvature == doctest::Approx(-2.0));
  CHECK(steep.argmin.norm() < 1e-12);
  (void)base;
}

TEST_CASE("heintze-karcher on the custom poincare factor") {
  const SpaceFormModel m = SpaceFormModel::custom(2, Expression::parse("log(2/(1 - r2))", 2));
  const HKReport r = heintze_karcher(star(m, perturbed(0.4, 0.1, 2), 3), m);
  REQUIRE(r.screen.has_value());
  CHECK(r.screen->passed);
  CHECK(r.precondition_met);
  CHECK(r.gap > 0.0);
  CHECK(std::abs(r.flux_vs_bulk) < 2e-2);
}

TEST_CASE("convergence helpers") {
  const std::vector<double> h = {0.4, 0.2, 0.1};
  const std::vector<double> v = {1.0 + 0.5 * 0.16, 1.0 + 0.5 * 0.04, 1.0 + 0.5 * 0.01};
  const Extrapolation ex = richardson(h, v, 2.0);
  CHECK(ex.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ex.order == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(ex.asymptotic);
  CHECK(convergence_order(0.04, 0.01, 0.4, 0.2) == doctest::Approx(2.0));
  const std::vector<double> e = {0.08, 0.02, 0.005};
  const auto o = consecutive_orders(h, e);
  REQUIRE(o.size() == 2);
  CHECK(o[1] == doctest::Approx(2.0));
  CHECK(overall_order(h, e) == doctest::Approx(2.0));
  CHECK(converges_with_order(h, e, 1.8, 1e-12));
  CHECK_FALSE(converges_with_order(h, e, 2.5, 1e-12));
  const std::vector<double> tiny = {1e-14, 3e-15, 2e-14};
  CHECK(converges_with_order(h, tiny, 1.0, 1e-12));
}

TEST_CASE("verdicts are three-valued and conservative") {
  const std::vector<double> h = {0.4, 0.2, 0.1};
  // A gap converging to 0.3 from above.
  const VerdictDetail strict = inequality_verdict(h, std::vector<double>{0.46, 0.34, 0.31}, true, 1e-3);
  CHECK(strict.verdict == Verdict::holds);
  // A gap converging to zero: non-strict holds, strict is inconclusive.
  const std::vector<double> zero = {0.04, 0.01, 0.0025};
  CHECK(inequality_verdict(h, zero, false, 1e-3).verdict == Verdict::holds);
  CHECK(inequality_verdict(h, zero, true, 1e-3).verdict == Verdict::inconclusive);
  // A clearly negative limit is violated.
  const VerdictDetail neg = inequality_verdict(h, std::vector<double>{-0.16, -0.28, -0.31}, false, 1e-3);
  CHECK(neg.verdict == Verdict::violated);
  // Noisy, non-monotone sequences are never called violated.
  const VerdictDetail noisy = inequality_verdict(h, std::vector<double>{-0.1, 0.2, -0.05}, false, 1e-3);
  CHECK(noisy.verdict != Verdict::violated);

  CHECK(equality_verdict(h, zero, 5e-2, 0.8, 1e-12).verdict == Verdict::holds);
  const VerdictDetail stuck = equality_verdict(h, std::vector<double>{0.5, 0.45, 0.44}, 5e-2, 0.8, 1e-12);
  CHECK(stuck.verdict == Verdict::violated);
  CHECK_FALSE(stuck.reason.empty());
  CHECK(equality_verdict(h, std::vector<double>{0.2, 0.05, 0.06}, 5e-2, 0.8, 1e-12).verdict != Verdict::holds);
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("field evaluator: analytic potential and interpolated samples") {
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const DomainMesh m = disk(hyp, 0.5, 3);
  const FieldEvaluator analytic(m, hyp, SpaceFormPotential{});
  CHECK(analytic.analytic());
  const ScalarField V = ScalarField::sample(m, [&](const Vec2& x) { return distance_and_potential(hyp, Vec(x)).V; });
  const FieldEvaluator sampled(V);
  CHECK_FALSE(sampled.analytic());
  const QuadratureScheme q = QuadratureScheme::build(m, hyp);
  double err = 0.0;
  for (const auto& p : q.cell_points()) {
    const PointDerivatives a = analytic.at(p), s = sampled.at(p);
    CHECK(a.value == doctest::Approx(distance_and_potential(hyp, Vec(p.x)).V).epsilon(1e-13));
    err = std::max(err, std::abs(a.value - s.value));
  }
  CHECK(err < 1e-3);
  const SpaceFormModel custom = saddle_model();
  const DomainMesh mc = disk(custom, 0.5, 0);
  try {
    (void)FieldEvaluator(mc, custom, SpaceFormPotential{});
    FAIL("expected missing prerequisite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::missing_prerequisite);
  }
}
