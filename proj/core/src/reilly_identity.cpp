#include "sfw/reilly_identity.hpp"

#include <cmath>

#include "sfw/boundary.hpp"
#include "sfw/error.hpp"

namespace sfw {

ReillyReport reilly_residual(const DomainMesh& mesh, const SpaceFormModel& model,
                             const ScalarField& f, const Weight& V, double K) {
  if (&f.mesh() != &mesh) fail(ErrorKind::usage, "f lives on a different mesh");
  if (!model.is_space_form() && model.dim() != 2)
    fail(ErrorKind::unsupported, "Ricci curvature of custom metrics is only available for n = 2");
  const double n = model.dim();
  const FieldEvaluator fe(f);
  const FieldEvaluator ve(mesh, model, V);
  const QuadratureScheme quad = QuadratureScheme::build(mesh, model);

  ReillyReport rep;
  rep.K = K;
  rep.h_max = mesh.h_max();
  rep.level = mesh.level();

  double t_lhs = 0.0, t3 = 0.0, t4 = 0.0;
  for (const auto& p : quad.cell_points()) {
    const Vec x(p.x);
    const Jet phi = model.log_factor(x);
    const double lam2 = std::exp(2.0 * phi.value);
    const double lam4 = lam2 * lam2;
    const PointDerivatives fd = fe.at(p);
    const PointDerivatives vd = ve.at(p);

    const Mat2 hf = conformal_covariant_hessian(phi.grad, Vec(fd.grad), Mat(fd.hess));
    const double lap_f = hf.trace() / lam2;
    const Mat2 A = hf + K * fd.value * lam2 * Mat2::Identity();
    const double shifted = lap_f + K * n * fd.value;
    t_lhs += p.weight * vd.value * (shifted * shifted - A.squaredNorm() / lam4);

    const Mat2 hv = conformal_covariant_hessian(phi.grad, Vec(vd.grad), Mat(vd.hess));
    const double lap_v = hv.trace() / lam2;
    const double rho = ricci_factor(model, x);
    const Mat2 B = hv + (-lap_v - (2.0 * n - 2.0) * K * vd.value + vd.value * rho) * lam2 *
                            Mat2::Identity();
    t3 += p.weight * fd.grad.dot(B * fd.grad) / lam4;
    t4 += p.weight * (n - 1.0) * (K * lap_v + n * K * K * vd.value) * fd.value * fd.value;
  }

  const BoundaryGeometry bg = boundary_geometry(mesh, model);
  const BoundaryTangentialData td = boundary_tangential_ops(f, bg, fe.vertex_derivatives());
  const auto& bverts = mesh.boundary_vertices();
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t i = 0; i < bverts.size(); ++i) {
    const PointDerivatives vd = ve.at_vertex(bverts[i]);
    const double dnu_v = vd.grad.dot(bg.normal[i]);
    const double u = td.u[i], z = td.z[i];
    b1 += bg.weight[i] * vd.value *
          (2.0 * u * td.lap_z[i] + (n - 1.0) * bg.H[i] * u * u + td.h_grad_z[i] +
           (2.0 * n - 2.0) * K * u * z);
    b2 += bg.weight[i] * dnu_v * (td.dz_ds[i] * td.dz_ds[i] - (n - 1.0) * K * z * z);
  }

  rep.T_lhs = t_lhs;
  rep.B1 = b1;
  rep.B2 = b2;
  rep.T3 = t3;
  rep.T4 = t4;
  rep.residual = t_lhs - (b1 + b2 + t3 + t4);
  rep.scale = std::abs(t_lhs) + std::abs(b1) + std::abs(b2) + std::abs(t3) + std::abs(t4);
  rep.relative_residual = rep.scale > 0.0 ? rep.residual / rep.scale : 0.0;
  return rep;
}

}  // namespace sfw
