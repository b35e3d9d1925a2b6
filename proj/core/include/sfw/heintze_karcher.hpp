#pragma once

#include <optional>
#include <string>

#include "sfw/curvature_screen.hpp"
#include "sfw/eikonal.hpp"
#include "sfw/scalar_field.hpp"

namespace sfw {

/// Which right-hand side the gap is measured against.
enum class HKReference { bulk_laplacian, n_volume };

struct HKReport {
  double lhs = 0.0;       ///< int_M V / H
  double rhs_bulk = 0.0;  ///< int Lap V
  double rhs_flux = 0.0;  ///< int_M d_nu V
  double alt_rhs = 0.0;   ///< n int V
  double gap = 0.0;       ///< lhs - reference
  HKReference reference = HKReference::bulk_laplacian;
  double min_H = 0.0;
  double min_V_boundary = 0.0;
  double flux_vs_bulk = 0.0;  ///< (rhs_flux - rhs_bulk) / max(|rhs_flux|, |rhs_bulk|, 1)
  bool precondition_met = false;
  std::string precondition_note;
  /// Custom metrics: curvature screen outcome and excluded cut-locus measure.
  std::optional<CurvatureScreen> screen;
  double excluded_measure = 0.0;
  double h_max = 0.0;
  int level = 0;
};

/// V = cosh r / 1 / cos r (space forms) or cosh of the fast-marching distance
/// (custom). The gap is measured against int Lap V for hyperbolic and custom
/// metrics, and against n int V for euclidean and spherical ones, matching
/// the respective theorems. No inequality claim is made when min H <= 0.
HKReport heintze_karcher(const DomainMesh& mesh, const SpaceFormModel& model,
                         double curvature_bound = -1.0);

/// Spherical form: int_M cos r / H against n int cos r. Also requires V to
/// stay bounded away from zero on the boundary. rhs_bulk = -alt_rhs here.
HKReport brendle_spherical(const DomainMesh& mesh, const SpaceFormModel& model);

struct MinkowskiReport {
  double V_area = 0.0;   ///< int_M V
  double Hp_area = 0.0;  ///< int_M H p
  double p_area = 0.0;   ///< int_M p
  double n_V_volume = 0.0;  ///< n int V
  double first_discrepancy = 0.0;   ///< relative, (V_area - Hp_area) / max
  double second_discrepancy = 0.0;  ///< relative, (p_area - n_V_volume) / max
  double h_max = 0.0;
  int level = 0;
};

/// Space forms only (p needs the closed-form distance); custom throws
/// missing_prerequisite.
MinkowskiReport minkowski_check(const DomainMesh& mesh, const SpaceFormModel& model);

/// (a - b) / max(|a|, |b|), zero when both vanish.
double relative_discrepancy(double a, double b);

}  // namespace sfw
