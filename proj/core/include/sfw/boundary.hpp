#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sfw/domain_mesh.hpp"
#include "sfw/recovery.hpp"
#include "sfw/scalar_field.hpp"

namespace sfw {

/// Parameter derivatives of the boundary curve x(t) at the boundary
/// vertices, from periodic fourth-order central differences in the
/// uniformly spaced polar parameter.
struct BoundaryCurve {
  std::vector<Vec2> d1;
  std::vector<Vec2> d2;
  double dtheta = 0.0;
};

BoundaryCurve boundary_curve(const DomainMesh& mesh);

std::vector<double> periodic_first_derivative(std::span<const double> v, double h);
std::vector<double> periodic_second_derivative(std::span<const double> v, double h);

/// Boundary geometry sampled at the boundary vertices (n = 2, so the
/// second fundamental form is the single number h(e, e) on the unit tangent e).
struct BoundaryGeometry {
  std::vector<Vec2> point;
  std::vector<Vec2> normal;       ///< chart components of nu, g(nu, nu) = 1
  std::vector<Vec2> tangent;      ///< chart components of e, g(e, e) = 1, counter-clockwise
  std::vector<Vec2> flat_normal;  ///< Euclidean unit outward normal
  std::vector<double> h;          ///< h(e, e) = g(nabla_e nu, e)
  std::vector<double> H;          ///< tr h / (n - 1)
  std::vector<double> speed;      ///< |x'(t)|_g
  std::vector<double> weight;     ///< dA quadrature weight
  std::vector<double> factor;     ///< lambda at the vertex
  std::vector<double> dlog_normal;  ///< flat normal derivative of ln(lambda)
  /// Support function sn_K(r) g(nabla r, nu); space forms only.
  std::optional<std::vector<double>> support;
  double dtheta = 0.0;

  std::size_t size() const { return point.size(); }
  double min_H() const;
  double max_H() const;
  double mean_H() const;  ///< dA-weighted mean
};

/// Throws Error(geometry) where the boundary tangent numerically vanishes.
BoundaryGeometry boundary_geometry(const DomainMesh& mesh, const SpaceFormModel& model);

/// Boundary data of a field: z = f|_M, u = nabla_nu f, the arclength
/// derivative of z (so |nabla z|^2 = dz_ds^2), the boundary Laplacian of z,
/// and h(nabla z, nabla z).
struct BoundaryTangentialData {
  std::vector<double> z;
  std::vector<double> u;
  std::vector<double> dz_ds;
  std::vector<double> lap_z;
  std::vector<double> h_grad_z;
};

/// u is the normal component of the recovered (one-sided quadratic fit)
/// gradient at each boundary vertex; boundary derivatives of z use the
/// metric arclength of the boundary curve.
BoundaryTangentialData boundary_tangential_ops(const ScalarField& field, const BoundaryGeometry& bg,
                                               std::span<const VertexDerivatives> derivatives);
BoundaryTangentialData boundary_tangential_ops(const ScalarField& field, const BoundaryGeometry& bg);

}  // namespace sfw
