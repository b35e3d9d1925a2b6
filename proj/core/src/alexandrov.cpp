#include "sfw/alexandrov.hpp"

#include <algorithm>
#include <cmath>

#include "sfw/boundary.hpp"
#include "sfw/error.hpp"
#include "sfw/field_eval.hpp"
#include "sfw/heintze_karcher.hpp"
#include "sfw/quadrature.hpp"

namespace sfw {

namespace {

struct BulkPoint {
  double weight, V, f, lam2;
  Mat2 hess;  ///< covariant Hessian of f
};

template <typename Fn>
void for_each_bulk_point(const DomainMesh& mesh, const SpaceFormModel& model,
                         const FieldEvaluator& fe, Fn&& fn) {
  const QuadratureScheme quad = QuadratureScheme::build(mesh, model);
  for (const auto& p : quad.cell_points()) {
    const Vec x(p.x);
    const Jet phi = model.log_factor(x);
    const PointDerivatives fd = fe.at(p);
    const Mat2 h = conformal_covariant_hessian(phi.grad, Vec(fd.grad), Mat(fd.hess));
    fn(BulkPoint{p.weight, distance_and_potential(model, x).V, fd.value,
                 std::exp(2.0 * phi.value), h});
  }
}

}  // namespace

AlexandrovReport alexandrov_chain(const DomainMesh& mesh, const SpaceFormModel& model,
                                  double cmc_tolerance) {
  if (!model.is_space_form()) fail(ErrorKind::unsupported, "the chain is stated in space forms");
  const double n = model.dim();
  const double K = model.curvature();
  const BoundaryGeometry bg = boundary_geometry(mesh, model);

  AlexandrovReport rep;
  rep.h_max = mesh.h_max();
  rep.level = mesh.level();
  rep.cmc_tolerance = cmc_tolerance;
  rep.H_mean = bg.mean_H();
  for (double H : bg.H) rep.H_max_deviation = std::max(rep.H_max_deviation, std::abs(H - rep.H_mean));
  rep.H_max_deviation /= std::abs(rep.H_mean);
  rep.cmc = rep.H_max_deviation <= cmc_tolerance;
  if (!rep.cmc) return rep;

  const SolveReport sol = solve_dirichlet(DirichletProblem::constant_mean_curvature(mesh));
  const FieldEvaluator fe(sol.solution);
  const BoundaryTangentialData td = boundary_tangential_ops(sol.solution, bg, fe.vertex_derivatives());

  AlexandrovChain ch;
  ch.iterations = sol.iterations;
  double vol_v = 0.0, obata = 0.0, norm = 0.0;
  for_each_bulk_point(mesh, model, fe, [&](const BulkPoint& p) {
    vol_v += p.weight * p.V;
    const Mat2 A = p.hess + K * p.f * p.lam2 * Mat2::Identity();
    const Mat2 D = A - p.lam2 / n * Mat2::Identity();
    obata += p.weight * D.squaredNorm() / (p.lam2 * p.lam2);
    norm += p.weight * A.squaredNorm() / (p.lam2 * p.lam2);
  });

  const double Hbar = rep.H_mean;
  double u2v = 0.0, hu2v = 0.0, uv = 0.0, v_area = 0.0;
  for (std::size_t i = 0; i < bg.size(); ++i) {
    const double V = distance_and_potential(model, Vec(bg.point[i])).V;
    const double u = td.u[i];
    u2v += bg.weight[i] * u * u * V;
    hu2v += bg.weight[i] * bg.H[i] * u * u * V;
    uv += bg.weight[i] * u * V;
    v_area += bg.weight[i] * V;
  }
  ch.lhs_32 = (n - 1.0) / n * vol_v;
  ch.rhs_32 = (n - 1.0) * hu2v;
  ch.slack_32 = (ch.lhs_32 - ch.rhs_32) / ch.lhs_32;
  ch.holder_left = n * Hbar * u2v;
  ch.holder_right = n * Hbar * uv * uv / v_area;
  ch.holder_slack = relative_discrepancy(ch.holder_left, ch.holder_right);
  ch.green_boundary = uv;
  ch.green_bulk = vol_v;
  ch.green_discrepancy = relative_discrepancy(uv, vol_v);
  ch.minkowski_boundary = v_area;
  ch.minkowski_bulk = n * Hbar * vol_v;
  ch.minkowski_discrepancy = relative_discrepancy(v_area, ch.minkowski_bulk);
  ch.obata_residual = norm > 0.0 ? obata / norm : 0.0;
  rep.chain = ch;
  return rep;
}

RigidityReport rigidity_residual(const DomainMesh& mesh, const SpaceFormModel& model,
                                 const SolveReport& solve) {
  if (!model.is_space_form() || model.kind() == SpaceFormKind::euclidean)
    fail(ErrorKind::unsupported,
         "the rigidity residual is defined for the hyperbolic and spherical problems");
  if (&solve.solution.mesh() != &mesh) fail(ErrorKind::usage, "solution lives on a different mesh");
  const double n = model.dim();
  const double K = model.curvature();
  const FieldEvaluator fe(solve.solution);
  RigidityReport rep;
  rep.h_max = mesh.h_max();
  rep.level = mesh.level();

  double raw = 0.0, hess2 = 0.0, f2 = 0.0, schwarz = 0.0;
  for_each_bulk_point(mesh, model, fe, [&](const BulkPoint& p) {
    const double l4 = p.lam2 * p.lam2;
    const Mat2 A = p.hess + K * p.f * p.lam2 * Mat2::Identity();
    raw += p.weight * A.squaredNorm() / l4;
    hess2 += p.weight * p.hess.squaredNorm() / l4;
    f2 += p.weight * p.f * p.f;
    const double shifted = p.hess.trace() / p.lam2 + K * n * p.f;
    schwarz += p.weight * p.V * shifted * shifted;
  });
  rep.obata_raw = raw;
  rep.obata_residual = raw / (hess2 + f2);
  rep.bulk_schwarz = (n - 1.0) / n * schwarz;

  const BoundaryGeometry bg = boundary_geometry(mesh, model);
  const BoundaryTangentialData td =
      boundary_tangential_ops(solve.solution, bg, fe.vertex_derivatives());
  double c = 0.0, total = 0.0;
  for (std::size_t i = 0; i < bg.size(); ++i) {
    c += bg.weight[i] * td.z[i];
    total += bg.weight[i];
  }
  rep.c = c / total;
  double bexpr = 0.0;
  for (std::size_t i = 0; i < bg.size(); ++i) {
    const PotentialSample ps = distance_and_potential(model, Vec(bg.point[i]));
    const double u = td.u[i];
    const double dnu_v = Vec2(ps.grad).dot(bg.normal[i]);
    bexpr += bg.weight[i] * ((n - 1.0) * bg.H[i] * u * u * ps.V +
                             (2.0 * n - 2.0) * K * rep.c * u * ps.V -
                             (n - 1.0) * K * rep.c * rep.c * dnu_v);
  }
  rep.boundary_expression = bexpr;
  rep.schwarz_slack = rep.bulk_schwarz - bexpr;
  return rep;
}

}  // namespace sfw
