#include "sfw/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "sfw/error.hpp"

namespace sfw {

namespace {

constexpr std::size_t kMinPatch = 12;

std::vector<int> collect_patch(const DomainMesh& mesh, int v, int rings) {
  std::vector<int> members{v};
  std::vector<int> frontier{v};
  for (int r = 0; r < rings; ++r) {
    std::vector<int> next;
    for (int u : frontier)
      for (int w : mesh.neighbors(u))
        if (std::find(members.begin(), members.end(), w) == members.end()) {
          members.push_back(w);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  std::sort(members.begin() + 1, members.end());
  return members;
}

}  // namespace

DerivativeRecovery::DerivativeRecovery(const DomainMesh& mesh) {
  const auto& vtx = mesh.vertices();
  offsets_.reserve(mesh.vertex_count() + 1);
  offsets_.push_back(0);
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    std::vector<int> members = collect_patch(mesh, static_cast<int>(v), 2);
    if (members.size() < kMinPatch) members = collect_patch(mesh, static_cast<int>(v), 3);
    if (members.size() < 6)
      fail(ErrorKind::recovery, "vertex " + std::to_string(v) + " has only " +
                                    std::to_string(members.size()) +
                                    " patch members; a quadratic fit needs 6");
    const Vec2& x0 = vtx[v];
    double scale = 0.0;
    for (int w : members) scale = std::max(scale, (vtx[static_cast<std::size_t>(w)] - x0).norm());
    const auto m = static_cast<Eigen::Index>(members.size());
    Eigen::MatrixXd A(m, 6);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Vec2 d = (vtx[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] - x0) / scale;
      A(i, 0) = 1.0;
      A(i, 1) = d.x();
      A(i, 2) = d.y();
      A(i, 3) = 0.5 * d.x() * d.x();
      A(i, 4) = d.x() * d.y();
      A(i, 5) = 0.5 * d.y() * d.y();
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < 6)
      fail(ErrorKind::recovery, "rank-deficient quadratic fit at vertex " + std::to_string(v));
    // Rows of the pseudo-inverse give the fit coefficients as linear maps.
    const Eigen::MatrixXd pinv = qr.solve(Eigen::MatrixXd::Identity(m, m));
    for (Eigen::Index i = 0; i < m; ++i) {
      patch_.push_back(members[static_cast<std::size_t>(i)]);
      weights_.push_back({pinv(1, i) / scale, pinv(2, i) / scale, pinv(3, i) / (scale * scale),
                          pinv(4, i) / (scale * scale), pinv(5, i) / (scale * scale)});
    }
    offsets_.push_back(patch_.size());
  }
}

std::vector<VertexDerivatives> DerivativeRecovery::apply(std::span<const double> values) const {
  const std::size_t nv = offsets_.size() - 1;
  if (values.size() != nv) fail(ErrorKind::usage, "value count does not match the recovery mesh");
  std::vector<VertexDerivatives> out(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    double gx = 0, gy = 0, hxx = 0, hxy = 0, hyy = 0;
    for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
      const double f = values[static_cast<std::size_t>(patch_[k])];
      const auto& w = weights_[k];
      gx += w[0] * f;
      gy += w[1] * f;
      hxx += w[2] * f;
      hxy += w[3] * f;
      hyy += w[4] * f;
    }
    out[v].grad = {gx, gy};
    out[v].hess << hxx, hxy, hxy, hyy;
  }
  return out;
}

std::vector<VertexDerivatives> recover_derivatives(const ScalarField& field) {
  return DerivativeRecovery(field.mesh()).apply(field.values());
}

std::vector<Mat2> recovered_hessian(const ScalarField& field, const SpaceFormModel& model) {
  const auto d = recover_derivatives(field);
  const auto& vtx = field.mesh().vertices();
  std::vector<Mat2> out(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) {
    const Jet phi = model.log_factor(Vec(vtx[v]));
    const Mat cov = conformal_covariant_hessian(phi.grad, Vec(d[v].grad), Mat(d[v].hess));
    out[v] = cov;
  }
  return out;
}

std::vector<Vec2> flat_cell_gradients(const ScalarField& field) {
  const DomainMesh& mesh = field.mesh();
  const auto& vtx = mesh.vertices();
  std::vector<Vec2> out(mesh.cell_count());
  for (std::size_t c = 0; c < mesh.cell_count(); ++c) {
    const Cell& cell = mesh.cells()[c];
    const Vec2& p0 = vtx[static_cast<std::size_t>(cell[0])];
    const Vec2 e1 = vtx[static_cast<std::size_t>(cell[1])] - p0;
    const Vec2 e2 = vtx[static_cast<std::size_t>(cell[2])] - p0;
    Mat2 J;
    J << e1.x(), e2.x(), e1.y(), e2.y();
    const Vec2 df(field[static_cast<std::size_t>(cell[1])] - field[static_cast<std::size_t>(cell[0])],
                  field[static_cast<std::size_t>(cell[2])] - field[static_cast<std::size_t>(cell[0])]);
    // df = J^T grad
    out[c] = J.transpose().inverse() * df;
  }
  return out;
}

std::vector<Vec2> gradient(const ScalarField& field) {
  const DomainMesh& mesh = field.mesh();
  const auto& vtx = mesh.vertices();
  auto flat = flat_cell_gradients(field);
  for (std::size_t c = 0; c < flat.size(); ++c) {
    const Cell& cell = mesh.cells()[c];
    const Vec2 centroid = (vtx[static_cast<std::size_t>(cell[0])] + vtx[static_cast<std::size_t>(cell[1])] +
                           vtx[static_cast<std::size_t>(cell[2])]) / 3.0;
    const double l = mesh.model().factor(Vec(centroid));
    flat[c] /= (l * l);
  }
  return flat;
}

}  // namespace sfw
