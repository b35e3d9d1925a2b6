#include <cmath>

#include "doctest.h"
#include "sfw/elliptic.hpp"
#include "sfw/error.hpp"
#include "support.hpp"

using namespace sfw;
using namespace sfw::testing;

namespace {

double max_error(const ScalarField& f, const std::function<double(const Vec2&)>& exact) {
  double e = 0.0;
  for (std::size_t v = 0; v < f.size(); ++v) e = std::max(e, std::abs(f[v] - exact(f.mesh().vertices()[v])));
  return e;
}

DomainMesh beyond_hemisphere(int level) {
  return disk(SpaceFormModel::spherical(2, 2.0), 1.15, level);
}

}  // namespace

TEST_CASE("shifted problem mapping") {
  const DomainMesh m = disk(SpaceFormModel::spherical(2), 0.5, 0);
  const DirichletProblem p = DirichletProblem::shifted(m, 1.0, 0.5, 2.0);
  CHECK(p.zeroth_order == -2.0);
  CHECK(std::get<double>(p.rhs) == -0.5);
  CHECK(std::get<double>(p.bdry) == 2.0);
  const DirichletProblem c = DirichletProblem::constant_mean_curvature(m);
  CHECK(c.zeroth_order == -2.0);
  CHECK(std::get<double>(c.rhs) == -1.0);
  CHECK(std::get<double>(c.bdry) == 0.0);
  const DomainMesh h = disk(SpaceFormModel::hyperbolic(2), 0.5, 0);
  const DirichletProblem w = DirichletProblem::weighted_heintze_karcher(h, 1.5);
  CHECK(w.zeroth_order == 2.0);
  CHECK(std::get<double>(w.rhs) == 0.0);
  CHECK(std::get<double>(w.bdry) == 1.5);
  CHECK(w.tolerance == 1e-10);
}

TEST_CASE("cosh r / cosh R on a hyperbolic geodesic ball") {
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const double R = 0.7;
  auto exact = [&](const Vec2& x) { return std::cosh(distance_and_potential(hyp, Vec(x)).r) / std::cosh(R); };
  std::vector<double> h, e, e0;
  for (int l = 1; l <= 3; ++l) {
    const DomainMesh m = disk(hyp, chart_radius_of_geodesic_ball(hyp, R), l);
    const SolveReport s = solve_dirichlet(DirichletProblem::weighted_heintze_karcher(m, 1.0));
    CHECK(s.residual <= 1e-10);
    CHECK(s.definiteness == Definiteness::positive_definite);
    h.push_back(m.h_max());
    e.push_back(max_error(s.solution, exact));
    e0.push_back(std::abs(s.solution[0] - 1.0 / std::cosh(R)));
  }
  CHECK(1.0 / std::cosh(R) == doctest::Approx(0.7967).epsilon(1e-4));
  CHECK(e0[2] < 1e-4);
  CHECK(order(e[0], e[2], h[0], h[2]) >= 1.8);
  CHECK(order(e0[0], e0[2], h[0], h[2]) >= 1.8);
}

TEST_CASE("poisson problem on the unit disk") {
  auto exact = [](const Vec2& x) { return 0.25 * (1.0 - x.squaredNorm()); };
  std::vector<double> h, e;
  for (int l = 1; l <= 3; ++l) {
    const DomainMesh m = disk(SpaceFormModel::euclidean(2), 1.0, l);
    const SolveReport s = solve_dirichlet(DirichletProblem::shifted(m, 0.0, -1.0, 0.0));
    h.push_back(m.h_max());
    e.push_back(max_error(s.solution, exact));
    if (l == 3) CHECK(s.solution[0] == doctest::Approx(0.25).epsilon(1e-3));
  }
  CHECK(order(e[0], e[2], h[0], h[2]) >= 1.8);
}

TEST_CASE("homogeneous data give the zero solution") {
  const DomainMesh m = star(SpaceFormModel::hyperbolic(2), perturbed(0.5, 0.15, 2), 2);
  DirichletProblem p = DirichletProblem::shifted(m, -1.0, 0.0, 0.0);
  const SolveReport s = solve_dirichlet(p);
  for (double v : s.solution.values()) CHECK(v == 0.0);
  CHECK(s.iterations == 0);
}

TEST_CASE("maximum principle for the weighted problem") {
  const DomainMesh m = star(SpaceFormModel::hyperbolic(2), perturbed(0.5, 0.15, 2), 3);
  const double c = 1.3;
  const SolveReport s = solve_dirichlet(DirichletProblem::weighted_heintze_karcher(m, c));
  for (double v : s.solution.values()) {
    CHECK(v > 0.0);
    CHECK(v <= c * (1.0 + 1e-9));
  }
}

TEST_CASE("boundary traces are imposed exactly") {
  const DomainMesh m = star(SpaceFormModel::spherical(2), perturbed(0.4, 0.1, 3), 2);
  std::vector<double> trace;
  for (double t : m.boundary_params()) trace.push_back(1.0 + 0.3 * std::cos(t) - 0.1 * std::sin(2 * t));
  DirichletProblem p = DirichletProblem::shifted(m, 1.0, 0.4, 0.0);
  p.bdry = trace;
  const SolveReport s = solve_dirichlet(p);
  const auto& bv = m.boundary_vertices();
  for (std::size_t i = 0; i < bv.size(); ++i) CHECK(s.solution[static_cast<std::size_t>(bv[i])] == trace[i]);
}

TEST_CASE("sampled source terms") {
  const SpaceFormModel e2 = SpaceFormModel::euclidean(2);
  // f = x (1 - r^2) has -Lap f = 8 x.
  auto exact = [](const Vec2& x) { return x.x() * (1.0 - x.squaredNorm()); };
  std::vector<double> h, err;
  for (int l = 2; l <= 4; ++l) {
    const DomainMesh m = disk(e2, 1.0, l);
    DirichletProblem p;
    p.mesh = &m;
    p.rhs = ScalarField::sample(m, [](const Vec2& x) { return 8.0 * x.x(); });
    p.bdry = 0.0;
    const SolveReport s = solve_dirichlet(p);
    h.push_back(m.h_max());
    err.push_back(max_error(s.solution, exact));
  }
  CHECK(order(err[0], err[2], h[0], h[2]) >= 1.8);
}

TEST_CASE("assembled system is symmetric with nonnegative energy") {
  const DomainMesh m = star(SpaceFormModel::hyperbolic(2), RadialProfile::ellipse(0.6, 0.4), 2);
  const LaplaceBeltramiForms f = assemble_laplace_beltrami(m, m.model(), 2.0);
  const SparseMatrix A = f.system();
  CHECK(SparseMatrix(A - SparseMatrix(A.transpose())).norm() < 1e-14 * A.norm());
  const SolveReport s = solve_dirichlet(DirichletProblem::weighted_heintze_karcher(m, 1.0));
  const Eigen::Map<const Eigen::VectorXd> x(s.solution.values().data(), static_cast<Eigen::Index>(s.solution.size()));
  CHECK(x.dot(f.stiffness * x) >= 0.0);
}

TEST_CASE("solves are deterministic") {
  const DomainMesh m = star(SpaceFormModel::spherical(2), perturbed(0.45, 0.1, 2), 3);
  const SolveReport a = solve_dirichlet(DirichletProblem::constant_mean_curvature(m));
  const SolveReport b = solve_dirichlet(DirichletProblem::constant_mean_curvature(m));
  CHECK(a.iterations == b.iterations);
  CHECK(a.history == b.history);
  CHECK(std::equal(a.solution.values().begin(), a.solution.values().end(), b.solution.values().begin()));
}

TEST_CASE("solver tolerance must lie in (0, 1e-6]") {
  const DomainMesh m = disk(SpaceFormModel::euclidean(2), 0.5, 0);
  for (double tol : {0.0, 1e-5, -1e-9}) {
    DirichletProblem p = DirichletProblem::shifted(m, 0.0, -1.0, 0.0);
    p.tolerance = tol;
    try {
      (void)solve_dirichlet(p);
      FAIL("expected a usage error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::usage);
    }
  }
}

TEST_CASE("caps beyond the hemisphere make the shifted operator indefinite") {
  const DomainMesh m = beyond_hemisphere(2);
  try {
    (void)solve_dirichlet(DirichletProblem::constant_mean_curvature(m));
    FAIL("expected an indefiniteness error");
  } catch (const IndefiniteError& e) {
    CHECK(e.kind() == ErrorKind::indefinite);
    CHECK(e.curvature() <= 0.0);
    CHECK(e.iteration() >= 0);
    CHECK(std::string(e.what()).find("curvature") != std::string::npos);
  }
  DirichletProblem p = DirichletProblem::constant_mean_curvature(m);
  p.throw_on_indefinite = false;
  const SolveReport s = solve_dirichlet(p);
  CHECK(s.definiteness == Definiteness::indefinite_detected);
}

TEST_CASE("caps inside the hemisphere stay definite") {
  const SpaceFormModel sph = SpaceFormModel::spherical(2);
  const DomainMesh m = disk(sph, 0.95, 3);
  const SolveReport s = solve_dirichlet(DirichletProblem::constant_mean_curvature(m));
  CHECK(s.definiteness == Definiteness::positive_definite);
  CHECK(s.residual <= 1e-10);
}

TEST_CASE("iteration cap raises an iteration error with the residual history") {
  const DomainMesh m = disk(SpaceFormModel::euclidean(2), 1.0, 3);
  DirichletProblem p = DirichletProblem::shifted(m, 0.0, -1.0, 0.0);
  p.max_iterations = 3;
  try {
    (void)solve_dirichlet(p);
    FAIL("expected an iteration error");
  } catch (const IterationError& e) {
    CHECK(e.kind() == ErrorKind::iteration);
    CHECK(e.residual_history().size() >= 3);
    CHECK(e.residual_history().back() > 1e-10);
  }
}

TEST_CASE("preconditioned conjugate gradients on a small SPD system") {
  Eigen::MatrixXd D(4, 4);
  D << 4, 1, 0, 0, 1, 3, 1, 0, 0, 1, 5, 2, 0, 0, 2, 6;
  const SparseMatrix A = D.sparseView();
  const Eigen::VectorXd b = Eigen::Vector4d(1, -2, 3, 0.5);
  const CgResult r = preconditioned_cg(A, b, 1e-14, 100);
  CHECK(r.converged);
  CHECK(!r.indefinite);
  CHECK((r.x - D.ldlt().solve(b)).norm() < 1e-12);
  D(0, 0) = -4;
  const CgResult bad = preconditioned_cg(SparseMatrix(D.sparseView()), b, 1e-14, 100);
  CHECK(bad.indefinite);
  CHECK(!bad.converged);
}
