#include "sfw/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sfw/error.hpp"
#include "sfw/space_form.hpp"

namespace sfw {

namespace {

template <typename T>
const T& wrap(const std::vector<T>& v, std::ptrdiff_t i) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  return v[static_cast<std::size_t>(((i % n) + n) % n)];
}

template <typename T>
T d1_stencil(const std::vector<T>& v, std::ptrdiff_t j, double h) {
  return (-wrap(v, j + 2) + 8.0 * wrap(v, j + 1) - 8.0 * wrap(v, j - 1) + wrap(v, j - 2)) /
         (12.0 * h);
}

template <typename T>
T d2_stencil(const std::vector<T>& v, std::ptrdiff_t j, double h) {
  return (-wrap(v, j + 2) + 16.0 * wrap(v, j + 1) - 30.0 * wrap(v, j) + 16.0 * wrap(v, j - 1) -
          wrap(v, j - 2)) /
         (12.0 * h * h);
}

}  // namespace

std::vector<double> periodic_first_derivative(std::span<const double> v, double h) {
  const std::vector<double> copy(v.begin(), v.end());
  std::vector<double> out(copy.size());
  for (std::size_t j = 0; j < copy.size(); ++j)
    out[j] = d1_stencil(copy, static_cast<std::ptrdiff_t>(j), h);
  return out;
}

std::vector<double> periodic_second_derivative(std::span<const double> v, double h) {
  const std::vector<double> copy(v.begin(), v.end());
  std::vector<double> out(copy.size());
  for (std::size_t j = 0; j < copy.size(); ++j)
    out[j] = d2_stencil(copy, static_cast<std::ptrdiff_t>(j), h);
  return out;
}

BoundaryCurve boundary_curve(const DomainMesh& mesh) {
  const auto& bv = mesh.boundary_vertices();
  const std::size_t nb = bv.size();
  if (nb < 5) fail(ErrorKind::geometry, "boundary needs at least 5 vertices");
  std::vector<Vec2> pts(nb);
  for (std::size_t j = 0; j < nb; ++j) pts[j] = mesh.vertices()[static_cast<std::size_t>(bv[j])];
  BoundaryCurve c;
  c.dtheta = 2.0 * std::numbers::pi / static_cast<double>(nb);
  c.d1.resize(nb);
  c.d2.resize(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    c.d1[j] = d1_stencil(pts, jj, c.dtheta);
    c.d2[j] = d2_stencil(pts, jj, c.dtheta);
  }
  return c;
}

double BoundaryGeometry::min_H() const { return *std::min_element(H.begin(), H.end()); }
double BoundaryGeometry::max_H() const { return *std::max_element(H.begin(), H.end()); }
double BoundaryGeometry::mean_H() const {
  double s = 0, w = 0;
  for (std::size_t j = 0; j < H.size(); ++j) {
    s += weight[j] * H[j];
    w += weight[j];
  }
  return s / w;
}

BoundaryGeometry boundary_geometry(const DomainMesh& mesh, const SpaceFormModel& model) {
  const BoundaryCurve curve = boundary_curve(mesh);
  const auto& bv = mesh.boundary_vertices();
  const std::size_t nb = bv.size();
  BoundaryGeometry bg;
  bg.dtheta = curve.dtheta;
  bg.point.resize(nb);
  bg.normal.resize(nb);
  bg.tangent.resize(nb);
  bg.flat_normal.resize(nb);
  bg.h.resize(nb);
  bg.H.resize(nb);
  bg.speed.resize(nb);
  bg.weight.resize(nb);
  bg.factor.resize(nb);
  bg.dlog_normal.resize(nb);
  if (model.is_space_form()) bg.support.emplace(nb);

  double typical = 0.0;
  for (const Vec2& d : curve.d1) typical = std::max(typical, d.norm());
  for (std::size_t j = 0; j < nb; ++j) {
    const Vec2 x = mesh.vertices()[static_cast<std::size_t>(bv[j])];
    const Vec2& xp = curve.d1[j];
    const Vec2& xpp = curve.d2[j];
    const double sp = xp.norm();
    if (!(sp > 1e-12 * typical)) {
      std::ostringstream os;
      os << "degenerate boundary tangent at boundary vertex " << j;
      fail(ErrorKind::geometry, os.str());
    }
    const Vec2 T = xp / sp;
    const Vec2 N(T.y(), -T.x());
    const double kappa_flat = (xp.x() * xpp.y() - xp.y() * xpp.x()) / (sp * sp * sp);
    const Jet phi = model.log_factor(Vec(x));
    const double lambda = std::exp(phi.value);
    const double dlog_n = phi.grad(0) * N.x() + phi.grad(1) * N.y();
    // Conformal change of the geodesic curvature: kappa_g = (kappa + d_N ln lambda) / lambda.
    const double kg = (kappa_flat + dlog_n) / lambda;
    bg.point[j] = x;
    bg.flat_normal[j] = N;
    bg.normal[j] = N / lambda;
    bg.tangent[j] = T / lambda;
    bg.h[j] = kg;
    bg.H[j] = kg;  // n - 1 = 1
    bg.factor[j] = lambda;
    bg.dlog_normal[j] = dlog_n;
    bg.speed[j] = lambda * sp;
    bg.weight[j] = lambda * sp * curve.dtheta;
    if (bg.support) {
      const PotentialSample ps = distance_and_potential(model, Vec(x));
      const double dr_nu = (ps.dr(0) * N.x() + ps.dr(1) * N.y()) / lambda;
      (*bg.support)[j] = sn_curv(ps.K, ps.r) * dr_nu;
    }
  }
  return bg;
}

BoundaryTangentialData boundary_tangential_ops(const ScalarField& field, const BoundaryGeometry& bg,
                                               std::span<const VertexDerivatives> derivatives) {
  const DomainMesh& mesh = field.mesh();
  const auto& bv = mesh.boundary_vertices();
  const std::size_t nb = bv.size();
  if (bg.size() != nb) fail(ErrorKind::usage, "boundary geometry does not match the field's mesh");
  if (derivatives.size() != mesh.vertex_count())
    fail(ErrorKind::usage, "derivative count does not match the mesh");
  BoundaryTangentialData d;
  d.z.resize(nb);
  d.u.resize(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    const auto v = static_cast<std::size_t>(bv[j]);
    d.z[j] = field[v];
    // u = g(nabla f, nu) = d_i f nu^i
    d.u[j] = derivatives[v].grad.dot(bg.normal[j]);
  }
  const double h = bg.dtheta;
  const auto zt = periodic_first_derivative(d.z, h);
  const auto ztt = periodic_second_derivative(d.z, h);
  const auto st = periodic_first_derivative(bg.speed, h);
  d.dz_ds.resize(nb);
  d.lap_z.resize(nb);
  d.h_grad_z.resize(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    const double s = bg.speed[j];
    d.dz_ds[j] = zt[j] / s;
    // d/ds (dz/ds) with ds = s dt
    d.lap_z[j] = (ztt[j] / s - zt[j] * st[j] / (s * s)) / s;
    d.h_grad_z[j] = bg.h[j] * d.dz_ds[j] * d.dz_ds[j];
  }
  return d;
}

BoundaryTangentialData boundary_tangential_ops(const ScalarField& field, const BoundaryGeometry& bg) {
  const auto d = recover_derivatives(field);
  return boundary_tangential_ops(field, bg, d);
}

}  // namespace sfw
