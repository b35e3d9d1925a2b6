#pragma once

#include <vector>

#include "sfw/scalar_field.hpp"
#include "sfw/space_form.hpp"

namespace sfw {

/// Chart partial derivatives recovered at a mesh vertex.
struct VertexDerivatives {
  Vec2 grad = Vec2::Zero();
  Mat2 hess = Mat2::Zero();
};

/// Patchwise quadratic least-squares derivative recovery.
///
/// Each vertex fits f(x0 + d) ~ c + g.d + d^T H d / 2 over its two-ring
/// (three-ring where the two-ring has fewer than 12 vertices, which happens
/// along the boundary). The fit is reproduced exactly for quadratics, so
/// gradients are second-order and Hessians first-order accurate. Fit weights
/// are precomputed, making recovery a fixed linear map of the nodal values.
class DerivativeRecovery {
 public:
  explicit DerivativeRecovery(const DomainMesh& mesh);

  std::vector<VertexDerivatives> apply(std::span<const double> values) const;
  std::size_t patch_size(int vertex) const {
    return offsets_[static_cast<std::size_t>(vertex) + 1] - offsets_[static_cast<std::size_t>(vertex)];
  }

 private:
  std::vector<int> patch_;
  std::vector<std::size_t> offsets_;
  /// Per patch member: weights for (gx, gy, hxx, hxy, hyy).
  std::vector<std::array<double, 5>> weights_;
};

std::vector<VertexDerivatives> recover_derivatives(const ScalarField& field);

/// Covariant Hessian (nabla^2 f)_ij = d_ij f - Gamma^k_ij d_k f per vertex.
std::vector<Mat2> recovered_hessian(const ScalarField& field, const SpaceFormModel& model);

/// Per-cell metric gradient g^{-1} * (flat P1 gradient), evaluated with the
/// metric at the cell centroid.
std::vector<Vec2> gradient(const ScalarField& field);

/// Flat (chart) P1 gradient of each cell.
std::vector<Vec2> flat_cell_gradients(const ScalarField& field);

}  // namespace sfw
