#include "sfw/elliptic.hpp"

#include <cmath>
#include <sstream>

#include "sfw/error.hpp"

namespace sfw {

DirichletProblem DirichletProblem::shifted(const DomainMesh& mesh, double K, double s, double c) {
  DirichletProblem p;
  p.mesh = &mesh;
  p.zeroth_order = -K * mesh.dim();
  p.rhs = -s;
  p.bdry = c;
  return p;
}

DirichletProblem DirichletProblem::weighted_heintze_karcher(const DomainMesh& mesh, double c) {
  if (!(c > 0.0)) fail(ErrorKind::usage, "boundary constant must be positive");
  const double K = mesh.model().is_space_form() ? mesh.model().curvature() : -1.0;
  return shifted(mesh, K, 0.0, c);
}

DirichletProblem DirichletProblem::constant_mean_curvature(const DomainMesh& mesh) {
  const double K = mesh.model().is_space_form() ? mesh.model().curvature() : -1.0;
  return shifted(mesh, K, 1.0, 0.0);
}

CgResult preconditioned_cg(const SparseMatrix& A, const Eigen::VectorXd& b, double tolerance,
                           int max_iterations) {
  CgResult out;
  const Eigen::Index n = b.size();
  out.x = Eigen::VectorXd::Zero(n);
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    out.converged = true;
    return out;
  }
  const Eigen::VectorXd diag = A.diagonal();
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(diag(i) > 0.0)) {
      out.indefinite = true;
      out.curvature = diag(i);
      return out;
    }
  const Eigen::VectorXd inv_diag = diag.cwiseInverse();
  Eigen::VectorXd r = b;
  Eigen::VectorXd z = inv_diag.cwiseProduct(r);
  Eigen::VectorXd p = z;
  Eigen::VectorXd Ap(n);
  double rz = r.dot(z);
  out.history.push_back(1.0);
  for (int it = 1; it <= max_iterations; ++it) {
    Ap.noalias() = A * p;
    const double curvature = p.dot(Ap);
    if (!(curvature > 0.0)) {
      out.indefinite = true;
      out.curvature = curvature;
      out.iterations = it;
      out.residual = r.norm() / bnorm;
      return out;
    }
    const double alpha = rz / curvature;
    out.x.noalias() += alpha * p;
    r.noalias() -= alpha * Ap;
    const double rel = r.norm() / bnorm;
    out.history.push_back(rel);
    out.iterations = it;
    out.residual = rel;
    if (rel <= tolerance) {
      out.converged = true;
      return out;
    }
    z = inv_diag.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  return out;
}

SolveReport solve_dirichlet(const DirichletProblem& problem) {
  if (problem.mesh == nullptr) fail(ErrorKind::usage, "Dirichlet problem has no mesh");
  if (!(problem.tolerance > 0.0 && problem.tolerance <= 1e-6))
    fail(ErrorKind::usage, "solver tolerance must lie in (0, 1e-6]");
  if (!std::isfinite(problem.zeroth_order))
    fail(ErrorKind::usage, "zeroth-order coefficient must be finite");
  const DomainMesh& mesh = *problem.mesh;
  const auto nv = mesh.vertex_count();
  const auto& bmap = mesh.boundary_vertex_map();
  const auto& bverts = mesh.boundary_vertices();

  const LaplaceBeltramiForms forms =
      assemble_laplace_beltrami(mesh, mesh.model(), problem.zeroth_order);
  const SparseMatrix A = forms.system();

  Eigen::VectorXd full_rhs(static_cast<Eigen::Index>(nv));
  if (const double* c = std::get_if<double>(&problem.rhs)) {
    full_rhs = forms.mass * Eigen::VectorXd::Constant(static_cast<Eigen::Index>(nv), *c);
  } else {
    const ScalarField& f = std::get<ScalarField>(problem.rhs);
    if (&f.mesh() != &mesh) fail(ErrorKind::usage, "source field lives on a different mesh");
    full_rhs = forms.mass * Eigen::Map<const Eigen::VectorXd>(f.values().data(),
                                                              static_cast<Eigen::Index>(nv));
  }

  Eigen::VectorXd trace = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nv));
  if (const double* c = std::get_if<double>(&problem.bdry)) {
    for (int v : bverts) trace(v) = *c;
  } else {
    const auto& vals = std::get<std::vector<double>>(problem.bdry);
    if (vals.size() != bverts.size())
      fail(ErrorKind::usage, "boundary value count does not match the boundary vertices");
    for (std::size_t j = 0; j < bverts.size(); ++j) trace(bverts[j]) = vals[j];
  }

  // Eliminate boundary unknowns.
  std::vector<int> interior_index(nv, -1);
  std::vector<int> interior;
  for (std::size_t v = 0; v < nv; ++v)
    if (bmap[v] < 0) {
      interior_index[v] = static_cast<int>(interior.size());
      interior.push_back(static_cast<int>(v));
    }
  const auto ni = static_cast<Eigen::Index>(interior.size());
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(A.nonZeros()));
  Eigen::VectorXd b(ni);
  for (Eigen::Index i = 0; i < ni; ++i) {
    const int row = interior[static_cast<std::size_t>(i)];
    double bi = full_rhs(row);
    for (SparseMatrix::InnerIterator it(A, row); it; ++it) {
      const auto col = static_cast<std::size_t>(it.col());
      if (interior_index[col] >= 0) trips.emplace_back(i, interior_index[col], it.value());
      else bi -= it.value() * trace(it.col());
    }
    b(i) = bi;
  }
  SparseMatrix Ared(ni, ni);
  Ared.setFromTriplets(trips.begin(), trips.end());
  Ared.makeCompressed();

  const int cap = problem.max_iterations > 0 ? problem.max_iterations : static_cast<int>(10 * ni + 100);
  CgResult cg = preconditioned_cg(Ared, b, problem.tolerance, cap);

  auto assemble_solution = [&](const Eigen::VectorXd& x) {
    std::vector<double> values(nv);
    for (std::size_t v = 0; v < nv; ++v)
      values[v] = interior_index[v] >= 0 ? x(interior_index[v]) : trace(static_cast<Eigen::Index>(v));
    return ScalarField(mesh, std::move(values), FieldTag::solution);
  };

  if (cg.indefinite) {
    std::ostringstream os;
    os << "indefinite operator -Delta + (" << problem.zeroth_order
       << "): conjugate-direction curvature " << cg.curvature << " <= 0 at iteration "
       << cg.iterations;
    if (problem.throw_on_indefinite) throw IndefiniteError(os.str(), cg.iterations, cg.curvature);
    return SolveReport{assemble_solution(cg.x), cg.residual, cg.iterations,
                       Definiteness::indefinite_detected, cg.history};
  }
  if (!cg.converged) {
    std::ostringstream os;
    os << "conjugate gradients did not reach relative residual " << problem.tolerance << " in "
       << cap << " iterations (last " << cg.residual << ")";
    throw IterationError(os.str(), cg.history);
  }
  return SolveReport{assemble_solution(cg.x), cg.residual, cg.iterations,
                     Definiteness::positive_definite, std::move(cg.history)};
}

}  // namespace sfw
