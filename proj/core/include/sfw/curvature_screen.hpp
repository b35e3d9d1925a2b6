#pragma once

#include "sfw/domain_mesh.hpp"

namespace sfw {

struct CurvatureScreen {
  double min_curvature = 0.0;
  double max_curvature = 0.0;
  double bound = -1.0;
  double tolerance = 1e-8;
  bool passed = false;
  Vec2 argmin = Vec2::Zero();
};

/// Gauss curvature -lambda^{-2} (flat Laplacian of ln lambda) at every cell
/// quadrature point and vertex. Passes when the minimum is at least
/// bound - tolerance. Throws unsupported for n = 3.
CurvatureScreen curvature_screen(const DomainMesh& mesh, const SpaceFormModel& model,
                                 double bound = -1.0, double tolerance = 1e-8);

}  // namespace sfw
