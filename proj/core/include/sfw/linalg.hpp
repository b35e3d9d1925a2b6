#pragma once

#include <Eigen/Dense>

namespace sfw {

inline constexpr int kMaxDim = 3;

/// Chart point / vector of dimension n <= 3 without heap allocation.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
/// Small symmetric or general n x n matrix, n <= 3.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

}  // namespace sfw
