#include "sfw/curvature_screen.hpp"

#include <limits>

#include "sfw/error.hpp"
#include "sfw/quadrature.hpp"

namespace sfw {

CurvatureScreen curvature_screen(const DomainMesh& mesh, const SpaceFormModel& model,
                                 double bound, double tolerance) {
  if (model.dim() != 2) fail(ErrorKind::unsupported, "curvature screen is defined for n = 2 only");
  CurvatureScreen s;
  s.bound = bound;
  s.tolerance = tolerance;
  s.min_curvature = std::numeric_limits<double>::infinity();
  s.max_curvature = -std::numeric_limits<double>::infinity();
  auto visit = [&](const Vec2& x) {
    const double k = gauss_curvature(model, Vec(x));
    if (k < s.min_curvature) {
      s.min_curvature = k;
      s.argmin = x;
    }
    s.max_curvature = std::max(s.max_curvature, k);
  };
  for (const Vec2& v : mesh.vertices()) visit(v);
  const QuadratureScheme quad = QuadratureScheme::build(mesh, model);
  for (const auto& p : quad.cell_points()) visit(p.x);
  s.passed = s.min_curvature >= bound - tolerance;
  return s;
}

}  // namespace sfw
