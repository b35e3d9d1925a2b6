#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "sfw/laplace_beltrami.hpp"
#include "sfw/scalar_field.hpp"

namespace sfw {

/// Constant value or one value per entry of mesh.boundary_vertices().
using BoundaryValues = std::variant<double, std::vector<double>>;
/// Constant value or per-vertex samples.
using SourceTerm = std::variant<double, ScalarField>;

/// Find f with -Delta f + c0 f = rhs in the domain and f = bdry on its boundary.
///
/// Mapping of the shifted problems Delta f + K n f = s:
///   c0 = -K n, rhs = -s.
/// The interior problem Delta f = n f used for the weighted inequality in
/// hyperbolic space is s = 0 with K = -1, and the constant-mean-curvature
/// problem Delta f + K n f = 1, f = 0 is s = 1.
struct DirichletProblem {
  const DomainMesh* mesh = nullptr;
  double zeroth_order = 0.0;
  SourceTerm rhs = 0.0;
  BoundaryValues bdry = 0.0;
  double tolerance = 1e-10;  ///< relative residual, in (0, 1e-6]
  int max_iterations = 0;    ///< 0 selects 10 * unknowns + 100
  bool throw_on_indefinite = true;

  /// Delta f + K n f = s in the domain, f = c on the boundary.
  static DirichletProblem shifted(const DomainMesh& mesh, double K, double s, double c);
  /// Delta f + K n f = 0, f = c > 0 on the boundary, K from the model (K = -1 for custom).
  static DirichletProblem weighted_heintze_karcher(const DomainMesh& mesh, double c = 1.0);
  /// Delta f + K n f = 1, f = 0 on the boundary, K from the model.
  static DirichletProblem constant_mean_curvature(const DomainMesh& mesh);
};

enum class Definiteness { positive_definite, indefinite_detected };

struct SolveReport {
  ScalarField solution;
  double residual = 0.0;  ///< relative algebraic residual of the reduced system
  int iterations = 0;
  Definiteness definiteness = Definiteness::positive_definite;
  std::vector<double> history;
};

SolveReport solve_dirichlet(const DirichletProblem& problem);

struct CgResult {
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  bool indefinite = false;
  double curvature = 0.0;  ///< offending p^T A p when indefinite
  std::vector<double> history;
};

/// Jacobi-preconditioned conjugate gradients from x = 0; stops at the
/// first non-positive curvature p^T A p or preconditioner pivot.
CgResult preconditioned_cg(const SparseMatrix& A, const Eigen::VectorXd& b, double tolerance,
                           int max_iterations);

}  // namespace sfw
