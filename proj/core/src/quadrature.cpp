#include "sfw/quadrature.hpp"

#include <cmath>

#include "sfw/boundary.hpp"
#include "sfw/error.hpp"

namespace sfw {

const TriangleRule& triangle_rule() {
  static const TriangleRule rule = [] {
    constexpr double a = 0.445948490915965;
    constexpr double wa = 0.223381589678011;
    constexpr double b = 0.091576213509771;
    constexpr double wb = 0.109951743655322;
    TriangleRule r{};
    r.bary = {{{a, a, 1.0 - 2.0 * a},
               {a, 1.0 - 2.0 * a, a},
               {1.0 - 2.0 * a, a, a},
               {b, b, 1.0 - 2.0 * b},
               {b, 1.0 - 2.0 * b, b},
               {1.0 - 2.0 * b, b, b}}};
    r.weights = {wa, wa, wa, wb, wb, wb};
    return r;
  }();
  return rule;
}

const SegmentRule& segment_rule() {
  static const SegmentRule rule = [] {
    const double d = std::sqrt(0.6) / 2.0;
    return SegmentRule{{0.5 - d, 0.5, 0.5 + d}, {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0}};
  }();
  return rule;
}

QuadratureScheme QuadratureScheme::build(const DomainMesh& mesh, const SpaceFormModel& model) {
  QuadratureScheme s;
  const auto& rule = triangle_rule();
  const auto& vtx = mesh.vertices();
  const int n = model.dim();
  s.cell_points_.reserve(mesh.cell_count() * TriangleRule::kPoints);
  for (std::size_t c = 0; c < mesh.cell_count(); ++c) {
    const Cell& cell = mesh.cells()[c];
    const double area = mesh.flat_area(static_cast<int>(c));
    for (int q = 0; q < TriangleRule::kPoints; ++q) {
      CellPoint p;
      p.cell = static_cast<int>(c);
      p.bary = rule.bary[static_cast<std::size_t>(q)];
      p.x = p.bary[0] * vtx[static_cast<std::size_t>(cell[0])] +
            p.bary[1] * vtx[static_cast<std::size_t>(cell[1])] +
            p.bary[2] * vtx[static_cast<std::size_t>(cell[2])];
      const double lambda = model.factor(Vec(p.x));
      p.weight = area * rule.weights[static_cast<std::size_t>(q)] * std::pow(lambda, n);
      s.cell_points_.push_back(p);
    }
  }
  const BoundaryCurve curve = boundary_curve(mesh);
  const auto& bv = mesh.boundary_vertices();
  s.boundary_weights_.resize(bv.size());
  for (std::size_t j = 0; j < bv.size(); ++j) {
    const double lambda = model.factor(Vec(vtx[static_cast<std::size_t>(bv[j])]));
    s.boundary_weights_[j] = lambda * curve.d1[j].norm() * curve.dtheta;
  }
  return s;
}

double integrate(const QuadratureScheme& scheme, std::span<const double> integrand,
                 Region region) {
  const std::size_t expected = scheme.size(region);
  if (integrand.size() != expected)
    fail(ErrorKind::usage, "integrand has " + std::to_string(integrand.size()) +
                               " samples but the " +
                               (region == Region::cells ? "cell" : "boundary") +
                               " scheme has " + std::to_string(expected) + " points");
  double sum = 0.0;
  if (region == Region::cells) {
    const auto pts = scheme.cell_points();
    for (std::size_t i = 0; i < expected; ++i) sum += pts[i].weight * integrand[i];
  } else {
    const auto w = scheme.boundary_weights();
    for (std::size_t i = 0; i < expected; ++i) sum += w[i] * integrand[i];
  }
  return sum;
}

}  // namespace sfw
