#include "sfw/heintze_karcher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfw/boundary.hpp"
#include "sfw/error.hpp"
#include "sfw/field_eval.hpp"
#include "sfw/quadrature.hpp"

namespace sfw {

double relative_discrepancy(double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  return m > 0.0 ? (a - b) / m : 0.0;
}

HKReport heintze_karcher(const DomainMesh& mesh, const SpaceFormModel& model,
                         double curvature_bound) {
  const double n = model.dim();
  const QuadratureScheme quad = QuadratureScheme::build(mesh, model);
  const BoundaryGeometry bg = boundary_geometry(mesh, model);
  HKReport rep;
  rep.h_max = mesh.h_max();
  rep.level = mesh.level();
  rep.min_H = bg.min_H();

  std::optional<EikonalResult> eik;
  std::optional<FieldEvaluator> ve;
  std::vector<char> excluded;
  if (model.is_space_form()) {
    ve.emplace(mesh, model, Weight{SpaceFormPotential{}});
    rep.reference = model.curvature() < 0.0 ? HKReference::bulk_laplacian : HKReference::n_volume;
  } else {
    rep.screen = curvature_screen(mesh, model, curvature_bound);
    eik = eikonal_distance(mesh, model);
    std::vector<double> v(mesh.vertex_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::cosh(eik->distance[i]);
    ve.emplace(mesh, model, Weight{ScalarField(mesh, std::move(v), FieldTag::potential)});
    excluded = suspect_cells(mesh, eik->cut_suspects);
    rep.excluded_measure = eik->suspect_measure;
    rep.reference = HKReference::bulk_laplacian;
  }

  double bulk = 0.0, vol_v = 0.0;
  for (const auto& p : quad.cell_points()) {
    const PointDerivatives vd = ve->at(p);
    vol_v += p.weight * vd.value;
    if (model.is_space_form()) {
      bulk += p.weight * (-n * model.curvature() * vd.value);
    } else if (excluded.empty() || !excluded[static_cast<std::size_t>(p.cell)]) {
      const Jet phi = model.log_factor(Vec(p.x));
      const Mat2 hv = conformal_covariant_hessian(phi.grad, Vec(vd.grad), Mat(vd.hess));
      bulk += p.weight * hv.trace() * std::exp(-2.0 * phi.value);
    }
  }
  rep.rhs_bulk = bulk;
  rep.alt_rhs = n * vol_v;

  const auto& bverts = mesh.boundary_vertices();
  double lhs = 0.0, flux = 0.0;
  rep.min_V_boundary = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < bverts.size(); ++i) {
    const PointDerivatives vd = ve->at_vertex(bverts[i]);
    rep.min_V_boundary = std::min(rep.min_V_boundary, vd.value);
    lhs += bg.weight[i] * vd.value / bg.H[i];
    flux += bg.weight[i] * vd.grad.dot(bg.normal[i]);
  }
  rep.lhs = lhs;
  rep.rhs_flux = flux;
  rep.flux_vs_bulk = (flux - bulk) / std::max({std::abs(flux), std::abs(bulk), 1.0});
  rep.gap = lhs - (rep.reference == HKReference::bulk_laplacian ? rep.rhs_bulk : rep.alt_rhs);
  rep.precondition_met = rep.min_H > 0.0;
  if (!rep.precondition_met) rep.precondition_note = "boundary is not mean-convex (min H <= 0)";
  if (rep.screen && !rep.screen->passed) {
    rep.precondition_met = false;
    rep.precondition_note = "sectional curvature falls below the bound";
  }
  return rep;
}

HKReport brendle_spherical(const DomainMesh& mesh, const SpaceFormModel& model) {
  if (model.kind() != SpaceFormKind::spherical)
    fail(ErrorKind::unsupported, "the cos r / H inequality is stated for spherical domains");
  HKReport rep = heintze_karcher(mesh, model);
  rep.reference = HKReference::n_volume;
  rep.gap = rep.lhs - rep.alt_rhs;
  if (rep.precondition_met && rep.min_V_boundary < 1e-2) {
    rep.precondition_met = false;
    rep.precondition_note = "domain reaches the equator (V -> 0 on the boundary)";
  }
  return rep;
}

MinkowskiReport minkowski_check(const DomainMesh& mesh, const SpaceFormModel& model) {
  if (!model.is_space_form())
    fail(ErrorKind::missing_prerequisite, "support function needs a space-form distance");
  const double n = model.dim();
  const QuadratureScheme quad = QuadratureScheme::build(mesh, model);
  const BoundaryGeometry bg = boundary_geometry(mesh, model);
  MinkowskiReport rep;
  rep.h_max = mesh.h_max();
  rep.level = mesh.level();
  const auto& bverts = mesh.boundary_vertices();
  const auto& p = *bg.support;
  for (std::size_t i = 0; i < bverts.size(); ++i) {
    const double V = distance_and_potential(model, Vec(bg.point[i])).V;
    rep.V_area += bg.weight[i] * V;
    rep.Hp_area += bg.weight[i] * bg.H[i] * p[i];
    rep.p_area += bg.weight[i] * p[i];
  }
  double vol_v = 0.0;
  for (const auto& q : quad.cell_points()) vol_v += q.weight * distance_and_potential(model, Vec(q.x)).V;
  rep.n_V_volume = n * vol_v;
  rep.first_discrepancy = relative_discrepancy(rep.V_area, rep.Hp_area);
  rep.second_discrepancy = relative_discrepancy(rep.p_area, rep.n_V_volume);
  return rep;
}

}  // namespace sfw
