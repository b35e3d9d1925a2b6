#pragma once

#include <Eigen/Sparse>

#include "sfw/domain_mesh.hpp"

namespace sfw {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// P1 weak forms of -Delta_g + c0 under g = lambda^2 * flat:
///   stiffness_ij = int lambda^{n-2} grad phi_i . grad phi_j dx
///   mass_ij      = int lambda^n phi_i phi_j dx
struct LaplaceBeltramiForms {
  SparseMatrix stiffness;
  SparseMatrix mass;
  double zeroth_order = 0.0;

  SparseMatrix system() const;
};

LaplaceBeltramiForms assemble_laplace_beltrami(const DomainMesh& mesh, const SpaceFormModel& model,
                                               double zeroth_order);

}  // namespace sfw
