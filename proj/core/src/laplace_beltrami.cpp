#include "sfw/laplace_beltrami.hpp"

#include <cmath>
#include <vector>

#include "sfw/quadrature.hpp"

namespace sfw {

SparseMatrix LaplaceBeltramiForms::system() const {
  SparseMatrix a = stiffness + zeroth_order * mass;
  a.makeCompressed();
  return a;
}

LaplaceBeltramiForms assemble_laplace_beltrami(const DomainMesh& mesh, const SpaceFormModel& model,
                                               double zeroth_order) {
  const auto& rule = triangle_rule();
  const auto& vtx = mesh.vertices();
  const int n = model.dim();
  const auto nv = static_cast<Eigen::Index>(mesh.vertex_count());
  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(mesh.cell_count() * 9);
  mt.reserve(mesh.cell_count() * 9);

  for (std::size_t c = 0; c < mesh.cell_count(); ++c) {
    const Cell& cell = mesh.cells()[c];
    const Vec2 p[3] = {vtx[static_cast<std::size_t>(cell[0])], vtx[static_cast<std::size_t>(cell[1])],
                       vtx[static_cast<std::size_t>(cell[2])]};
    const double area = mesh.flat_area(static_cast<int>(c));
    // Gradients of the barycentric basis: grad b_i = rot(p_{i+2} - p_{i+1}) / (2 area).
    Vec2 grad[3];
    for (int i = 0; i < 3; ++i) {
      const Vec2 e = p[(i + 2) % 3] - p[(i + 1) % 3];
      grad[i] = Vec2(-e.y(), e.x()) / (2.0 * area);
    }
    double stiff_weight = 0.0;
    double mass_local[3][3] = {};
    for (int q = 0; q < TriangleRule::kPoints; ++q) {
      const auto& b = rule.bary[static_cast<std::size_t>(q)];
      const Vec2 x = b[0] * p[0] + b[1] * p[1] + b[2] * p[2];
      const double lambda = model.factor(Vec(x));
      const double w = rule.weights[static_cast<std::size_t>(q)] * area;
      stiff_weight += w * (n == 2 ? 1.0 : std::pow(lambda, n - 2));
      const double wm = w * std::pow(lambda, n);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mass_local[i][j] += wm * b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        kt.emplace_back(cell[static_cast<std::size_t>(i)], cell[static_cast<std::size_t>(j)],
                        stiff_weight * grad[i].dot(grad[j]));
        mt.emplace_back(cell[static_cast<std::size_t>(i)], cell[static_cast<std::size_t>(j)], mass_local[i][j]);
      }
  }
  LaplaceBeltramiForms forms;
  forms.zeroth_order = zeroth_order;
  forms.stiffness.resize(nv, nv);
  forms.mass.resize(nv, nv);
  forms.stiffness.setFromTriplets(kt.begin(), kt.end());
  forms.mass.setFromTriplets(mt.begin(), mt.end());
  forms.stiffness.makeCompressed();
  forms.mass.makeCompressed();
  return forms;
}

}  // namespace sfw
