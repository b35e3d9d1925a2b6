#pragma once

#include <optional>

#include "sfw/elliptic.hpp"

namespace sfw {

struct AlexandrovChain {
  double lhs_32 = 0.0;  ///< (n-1)/n int V
  double rhs_32 = 0.0;  ///< (n-1) int_M H u^2 V
  double slack_32 = 0.0;          ///< (lhs_32 - rhs_32) / lhs_32
  double holder_left = 0.0;       ///< n H int_M u^2 V
  double holder_right = 0.0;      ///< n H (int_M u V)^2 / int_M V
  double holder_slack = 0.0;      ///< relative
  double green_boundary = 0.0;    ///< int_M u V
  double green_bulk = 0.0;        ///< int V
  double green_discrepancy = 0.0; ///< relative
  double minkowski_boundary = 0.0;    ///< int_M V
  double minkowski_bulk = 0.0;        ///< n H int V
  double minkowski_discrepancy = 0.0; ///< relative
  /// int |Hess f + K f g - g/n|^2 / int |Hess f + K f g|^2.
  double obata_residual = 0.0;
  int iterations = 0;
};

struct AlexandrovReport {
  double H_mean = 0.0;
  double H_max_deviation = 0.0;  ///< max |H - mean| / mean
  bool cmc = false;
  double cmc_tolerance = 1e-3;
  std::optional<AlexandrovChain> chain;  ///< absent when not CMC
  double h_max = 0.0;
  int level = 0;
};

/// Screens the boundary for constant mean curvature, then solves
/// Lap f + K n f = 1, f = 0 and evaluates every link of the chain.
/// Propagates IndefiniteError from the solve.
AlexandrovReport alexandrov_chain(const DomainMesh& mesh, const SpaceFormModel& model,
                                  double cmc_tolerance = 1e-3);

struct RigidityReport {
  /// int |Hess f + K f g|^2 / (int |Hess f|^2 + int f^2).
  double obata_residual = 0.0;
  double obata_raw = 0.0;
  double bulk_schwarz = 0.0;         ///< (n-1)/n int V (Lap f + K n f)^2
  double boundary_expression = 0.0;  ///< int_M (n-1)H u^2 V + (2n-2)K c u V - (n-1)K c^2 d_nu V
  double schwarz_slack = 0.0;        ///< bulk_schwarz - boundary_expression
  double c = 0.0;
  double h_max = 0.0;
  int level = 0;
};

/// For the solution of Lap f + K n f = 0, f = c > 0 on the boundary.
/// Hyperbolic and spherical models only; others throw unsupported.
RigidityReport rigidity_residual(const DomainMesh& mesh, const SpaceFormModel& model,
                                 const SolveReport& solve);

}  // namespace sfw
