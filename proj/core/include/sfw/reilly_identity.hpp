#pragma once

#include "sfw/field_eval.hpp"

namespace sfw {

/// Named terms of the weighted Reilly identity
///   T_lhs = B1 + B2 + T3 + T4
/// for a function f, weight V and shift K.
struct ReillyReport {
  double T_lhs = 0.0;  ///< int V((Lap f + K n f)^2 - |Hess f + K f g|^2)
  double B1 = 0.0;     ///< int_M V(2u Lap z + (n-1)H u^2 + h(grad z, grad z) + (2n-2)K u z)
  double B2 = 0.0;     ///< int_M d_nu V (|grad z|^2 - (n-1)K z^2)
  double T3 = 0.0;     ///< int (Hess V - Lap V g - (2n-2)K V g + V Ric)(grad f, grad f)
  double T4 = 0.0;     ///< (n-1) int (K Lap V + n K^2 V) f^2
  double residual = 0.0;
  double scale = 0.0;  ///< sum of |terms|
  double relative_residual = 0.0;
  double K = 0.0;
  double h_max = 0.0;
  int level = 0;
};

/// Assembles every term from the mesh data: nodal values with recovered
/// derivatives for discrete fields, exact metric and Ricci curvature.
/// Throws unsupported for custom metrics in three dimensions.
ReillyReport reilly_residual(const DomainMesh& mesh, const SpaceFormModel& model,
                             const ScalarField& f, const Weight& V, double K);

}  // namespace sfw
