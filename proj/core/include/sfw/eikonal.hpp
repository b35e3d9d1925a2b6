#pragma once

#include <vector>

#include "sfw/scalar_field.hpp"

namespace sfw {

struct EikonalResult {
  ScalarField distance;
  /// max and mean of | |grad r|_g - 1 | (recovered gradients) over vertices
  /// at least two rings and exclusion_radius away from the base point.
  double max_gradient_defect = 0.0;
  double mean_gradient_defect = 0.0;
  /// Vertices where |Hess r|_g > 4(1 + 1/r): cut-locus suspects.
  std::vector<int> cut_suspects;
  /// Metric area of the cells touching a suspect.
  double suspect_measure = 0.0;
  double exclusion_radius = 0.0;  ///< chart radius, 0.2 * min boundary radius
  int accepted = 0;
};

/// First-arrival geodesic distance from the chart origin by fast marching
/// with segment-minimising triangle updates and metric chord lengths.
/// Throws Error(domain) when the origin is not a mesh vertex.
EikonalResult eikonal_distance(const DomainMesh& mesh, const SpaceFormModel& model);

/// Vertex flags (per cell) marking cells that touch a cut-locus suspect.
std::vector<char> suspect_cells(const DomainMesh& mesh, const std::vector<int>& suspects);

}  // namespace sfw
