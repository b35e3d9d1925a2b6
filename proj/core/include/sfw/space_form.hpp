#pragma once

#include <array>
#include <limits>
#include <string_view>

#include "sfw/expression.hpp"
#include "sfw/jet.hpp"
#include "sfw/linalg.hpp"

namespace sfw {

enum class SpaceFormKind { euclidean, hyperbolic, spherical, custom };

std::string_view to_string(SpaceFormKind kind) noexcept;

/// Ambient geometry g = lambda^2 * (flat inner product) on a chart of R^n.
///
/// The three space forms use the Poincare ball (K = -1), the stereographic
/// chart (K = +1, the unit ball being the open hemisphere) and the identity
/// chart (K = 0). Custom models carry a user expression phi = ln(lambda).
/// The base point of the distance function is always the chart origin.
class SpaceFormModel {
 public:
  static SpaceFormModel euclidean(int dim);
  static SpaceFormModel hyperbolic(int dim);
  /// chart_radius > 1 admits caps beyond the hemisphere; only used to drive
  /// the indefinite-operator path of the shifted Dirichlet problem.
  static SpaceFormModel spherical(int dim, double chart_radius = 1.0);
  static SpaceFormModel custom(int dim, Expression log_factor,
                               double chart_radius = std::numeric_limits<double>::infinity());

  SpaceFormKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool is_space_form() const { return kind_ != SpaceFormKind::custom; }
  /// Sectional curvature K of a space form; throws unsupported for custom.
  double curvature() const;
  double chart_radius() const { return chart_radius_; }
  const Expression& log_factor_expression() const { return log_factor_; }

  bool in_chart(const Vec& x) const;
  /// Throws Error(domain) naming the offending radius.
  void require_in_chart(const Vec& x) const;

  /// ln(lambda) with exact first and second chart derivatives.
  Jet log_factor(const Vec& x) const;
  double factor(const Vec& x) const;

 private:
  SpaceFormModel(SpaceFormKind kind, int dim, double chart_radius)
      : kind_(kind), dim_(dim), chart_radius_(chart_radius) {}

  SpaceFormKind kind_ = SpaceFormKind::euclidean;
  int dim_ = 2;
  double chart_radius_ = std::numeric_limits<double>::infinity();
  Expression log_factor_;
};

struct MetricSample {
  Vec point;
  double factor = 1.0;  ///< lambda
  Vec dlog_factor;      ///< partial derivatives of ln(lambda)
  Mat g;
  Mat g_inv;
  /// christoffel[k](i, j) = Gamma^k_ij.
  std::array<Mat, kMaxDim> christoffel;
  double vol_density = 1.0;  ///< sqrt(det g) = lambda^n
};

MetricSample metric_at(const SpaceFormModel& model, const Vec& x);

struct PotentialSample {
  double V = 1.0;
  Vec grad;       ///< partial derivatives dV/dx_i (metric gradient is g_inv * grad)
  Mat hess;       ///< covariant Hessian (nabla^2 V)_ij
  Mat chart_hess; ///< second partials d^2 V / dx_i dx_j
  double r = 0.0; ///< geodesic distance to the chart origin
  Vec dr;         ///< partials of r (zero at the origin)
  double K = 0.0;
};

/// Space-form modes only; custom models need a distance field
/// (see eikonal_distance) and raise missing_prerequisite here.
PotentialSample distance_and_potential(const SpaceFormModel& model, const Vec& x);

/// Largest |eigenvalue| of nabla^2 r - (cn_K/sn_K)(g - dr*dr) in a
/// g-orthonormal frame. Zero in space forms up to roundoff.
double hessian_comparison_residual(const SpaceFormModel& model, const Vec& x);

/// Gauss curvature -lambda^{-2} * (flat Laplacian of ln lambda); n = 2 only.
double gauss_curvature(const SpaceFormModel& model, const Vec& x);

/// rho with Ric = rho * g: (n-1)K for space forms, Gauss curvature for
/// custom n = 2; custom n = 3 is unsupported.
double ricci_factor(const SpaceFormModel& model, const Vec& x);

/// sn_K(r): sinh r, r, sin r for K = -1, 0, +1 (general K >= or <= 0 supported).
double sn_curv(double K, double r);
/// cn_K(r) = d/dr sn_K(r).
double cn_curv(double K, double r);

/// (nabla^2 f)_ij = d_ij f - Gamma^k_ij d_k f for g = e^{2 phi} * flat,
/// where dphi are the partials of phi = ln(lambda).
Mat conformal_covariant_hessian(const Vec& dphi, const Vec& df, const Mat& d2f);

}  // namespace sfw
