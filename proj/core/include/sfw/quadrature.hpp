#pragma once

#include <array>
#include <span>
#include <vector>

#include "sfw/domain_mesh.hpp"

namespace sfw {

/// Symmetric degree-4 rule on the reference triangle (6 points).
struct TriangleRule {
  static constexpr int kPoints = 6;
  std::array<std::array<double, 3>, kPoints> bary;
  std::array<double, kPoints> weights;  ///< sum to 1
};

const TriangleRule& triangle_rule();

/// 3-point Gauss-Legendre rule on [0, 1].
struct SegmentRule {
  std::array<double, 3> nodes;
  std::array<double, 3> weights;
};

const SegmentRule& segment_rule();

enum class Region { cells, boundary };

/// Sample points and metric weights realising the volume and boundary
/// measures of a mesh under a conformal metric.
///
/// Cells use the degree-4 triangle rule weighted by lambda^n. The boundary
/// uses the periodic trapezoid rule in the polar parameter of the boundary
/// vertices, weighted by the metric speed |x'(t)|_g.
class QuadratureScheme {
 public:
  struct CellPoint {
    int cell = 0;
    std::array<double, 3> bary{};
    Vec2 x = Vec2::Zero();
    double weight = 0.0;  ///< flat area weight * lambda^n
  };

  static QuadratureScheme build(const DomainMesh& mesh, const SpaceFormModel& model);

  std::span<const CellPoint> cell_points() const { return cell_points_; }
  /// One weight per entry of mesh.boundary_vertices().
  std::span<const double> boundary_weights() const { return boundary_weights_; }
  std::size_t size(Region region) const {
    return region == Region::cells ? cell_points_.size() : boundary_weights_.size();
  }

 private:
  std::vector<CellPoint> cell_points_;
  std::vector<double> boundary_weights_;
};

/// Weighted sum in index order; throws usage on a size mismatch.
double integrate(const QuadratureScheme& scheme, std::span<const double> integrand,
                 Region region);

}  // namespace sfw
