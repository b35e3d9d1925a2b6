#include "sfw/space_form.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sfw/error.hpp"

namespace sfw {

std::string_view to_string(SpaceFormKind kind) noexcept {
  switch (kind) {
    case SpaceFormKind::euclidean: return "euclidean";
    case SpaceFormKind::hyperbolic: return "hyperbolic";
    case SpaceFormKind::spherical: return "spherical";
    case SpaceFormKind::custom: return "custom";
  }
  return "unknown";
}

namespace {

void check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim)
    fail(ErrorKind::spec, "space form dimension must be 2 or 3, got " + std::to_string(dim));
}

}  // namespace

SpaceFormModel SpaceFormModel::euclidean(int dim) {
  check_dim(dim);
  return SpaceFormModel(SpaceFormKind::euclidean, dim, std::numeric_limits<double>::infinity());
}

SpaceFormModel SpaceFormModel::hyperbolic(int dim) {
  check_dim(dim);
  return SpaceFormModel(SpaceFormKind::hyperbolic, dim, 1.0);
}

SpaceFormModel SpaceFormModel::spherical(int dim, double chart_radius) {
  check_dim(dim);
  if (!(chart_radius > 0.0)) fail(ErrorKind::spec, "spherical chart radius must be positive");
  return SpaceFormModel(SpaceFormKind::spherical, dim, chart_radius);
}

SpaceFormModel SpaceFormModel::custom(int dim, Expression log_factor, double chart_radius) {
  check_dim(dim);
  if (log_factor.empty()) fail(ErrorKind::spec, "custom model needs a conformal factor expression");
  if (log_factor.dim() != dim)
    fail(ErrorKind::spec, "conformal factor expression dimension does not match the model");
  SpaceFormModel m(SpaceFormKind::custom, dim, chart_radius);
  m.log_factor_ = std::move(log_factor);
  return m;
}

double SpaceFormModel::curvature() const {
  switch (kind_) {
    case SpaceFormKind::euclidean: return 0.0;
    case SpaceFormKind::hyperbolic: return -1.0;
    case SpaceFormKind::spherical: return 1.0;
    case SpaceFormKind::custom: break;
  }
  fail(ErrorKind::unsupported, "custom conformal models have no constant curvature");
}

bool SpaceFormModel::in_chart(const Vec& x) const {
  return x.size() == dim_ && x.norm() < chart_radius_;
}

void SpaceFormModel::require_in_chart(const Vec& x) const {
  if (x.size() != dim_)
    fail(ErrorKind::usage, "point dimension does not match the model dimension");
  if (!in_chart(x)) {
    std::ostringstream os;
    os.precision(17);
    os << "chart point at radius " << x.norm() << " lies outside the " << to_string(kind_)
       << " chart of radius " << chart_radius_;
    fail(ErrorKind::domain, os.str());
  }
}

Jet SpaceFormModel::log_factor(const Vec& x) const {
  const int n = dim_;
  const double s = x.squaredNorm();
  Jet j(n);
  switch (kind_) {
    case SpaceFormKind::euclidean:
      return j;
    case SpaceFormKind::hyperbolic: {
      const double d = 1.0 - s;
      j.value = std::log(2.0 / d);
      j.grad = (2.0 / d) * x;
      j.hess = (2.0 / d) * Mat::Identity(n, n) + (4.0 / (d * d)) * (x * x.transpose());
      return j;
    }
    case SpaceFormKind::spherical: {
      const double d = 1.0 + s;
      j.value = std::log(2.0 / d);
      j.grad = (-2.0 / d) * x;
      j.hess = (-2.0 / d) * Mat::Identity(n, n) + (4.0 / (d * d)) * (x * x.transpose());
      return j;
    }
    case SpaceFormKind::custom: {
      Jet phi = log_factor_.jet(x);
      if (!std::isfinite(phi.value) || !phi.grad.allFinite() || !phi.hess.allFinite()) {
        std::ostringstream os;
        os << "conformal factor is not finite at chart radius " << x.norm();
        fail(ErrorKind::domain, os.str());
      }
      return phi;
    }
  }
  return j;
}

double SpaceFormModel::factor(const Vec& x) const {
  switch (kind_) {
    case SpaceFormKind::euclidean: return 1.0;
    case SpaceFormKind::hyperbolic: return 2.0 / (1.0 - x.squaredNorm());
    case SpaceFormKind::spherical: return 2.0 / (1.0 + x.squaredNorm());
    case SpaceFormKind::custom: return std::exp(log_factor_.value(x));
  }
  return 1.0;
}

MetricSample metric_at(const SpaceFormModel& model, const Vec& x) {
  model.require_in_chart(x);
  const int n = model.dim();
  const Jet phi = model.log_factor(x);
  MetricSample m;
  m.point = x;
  m.factor = std::exp(phi.value);
  m.dlog_factor = phi.grad;
  const double l2 = m.factor * m.factor;
  m.g = l2 * Mat::Identity(n, n);
  m.g_inv = (1.0 / l2) * Mat::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    Mat gk = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = 0.0;
        if (i == k) v += phi.grad(j);
        if (j == k) v += phi.grad(i);
        if (i == j) v -= phi.grad(k);
        gk(i, j) = v;
      }
    m.christoffel[static_cast<std::size_t>(k)] = gk;
  }
  m.vol_density = std::pow(m.factor, n);
  return m;
}

Mat conformal_covariant_hessian(const Vec& dphi, const Vec& df, const Mat& d2f) {
  const auto n = dphi.size();
  return d2f - (df * dphi.transpose() + dphi * df.transpose()) +
         dphi.dot(df) * Mat::Identity(n, n);
}

namespace {

/// r = F(|x|) with the first two derivatives of F.
struct RadialDistance {
  double r, dF, d2F;
};

RadialDistance radial_distance(SpaceFormKind kind, double t) {
  switch (kind) {
    case SpaceFormKind::hyperbolic: {
      const double d = 1.0 - t * t;
      return {2.0 * std::atanh(t), 2.0 / d, 4.0 * t / (d * d)};
    }
    case SpaceFormKind::spherical: {
      const double d = 1.0 + t * t;
      return {2.0 * std::atan(t), 2.0 / d, -4.0 * t / (d * d)};
    }
    default:
      return {t, 1.0, 0.0};
  }
}

}  // namespace

PotentialSample distance_and_potential(const SpaceFormModel& model, const Vec& x) {
  if (!model.is_space_form())
    fail(ErrorKind::missing_prerequisite,
         "custom conformal models need a precomputed distance field (eikonal_distance)");
  model.require_in_chart(x);
  const int n = model.dim();
  const double s = x.squaredNorm();
  const double t = std::sqrt(s);
  const Mat I = Mat::Identity(n, n);
  const Mat xx = x * x.transpose();

  PotentialSample p;
  p.K = model.curvature();
  const RadialDistance rd = radial_distance(model.kind(), t);
  p.r = rd.r;
  p.dr = t > 0.0 ? Vec((rd.dF / t) * x) : Vec(Vec::Zero(n));

  switch (model.kind()) {
    case SpaceFormKind::hyperbolic: {
      const double d = 1.0 - s;
      p.V = (1.0 + s) / d;
      p.grad = (4.0 / (d * d)) * x;
      p.chart_hess = (4.0 / (d * d)) * I + (16.0 / (d * d * d)) * xx;
      break;
    }
    case SpaceFormKind::spherical: {
      const double d = 1.0 + s;
      p.V = (1.0 - s) / d;
      p.grad = (-4.0 / (d * d)) * x;
      p.chart_hess = (-4.0 / (d * d)) * I + (16.0 / (d * d * d)) * xx;
      break;
    }
    default:
      p.V = 1.0;
      p.grad = Vec::Zero(n);
      p.chart_hess = Mat::Zero(n, n);
      break;
  }
  const Jet phi = model.log_factor(x);
  p.hess = conformal_covariant_hessian(phi.grad, p.grad, p.chart_hess);
  return p;
}

double sn_curv(double K, double r) {
  if (K == 0.0) return r;
  if (K < 0.0) {
    const double a = std::sqrt(-K);
    return std::sinh(a * r) / a;
  }
  const double a = std::sqrt(K);
  return std::sin(a * r) / a;
}

double cn_curv(double K, double r) {
  if (K == 0.0) return 1.0;
  if (K < 0.0) return std::cosh(std::sqrt(-K) * r);
  return std::cos(std::sqrt(K) * r);
}

double hessian_comparison_residual(const SpaceFormModel& model, const Vec& x) {
  if (!model.is_space_form())
    fail(ErrorKind::unsupported, "Hessian comparison residual is defined for space forms only");
  model.require_in_chart(x);
  const double t = x.norm();
  if (!(t > 0.0))
    fail(ErrorKind::singularity, "Hessian comparison residual is singular at the base point r = 0");
  const int n = model.dim();
  const RadialDistance rd = radial_distance(model.kind(), t);
  const Mat I = Mat::Identity(n, n);
  const Mat xx = x * x.transpose();
  const Vec dr = (rd.dF / t) * x;
  const Mat d2r = (rd.d2F / (t * t)) * xx + rd.dF * (I / t - xx / (t * t * t));
  const Jet phi = model.log_factor(x);
  const Mat cov = conformal_covariant_hessian(phi.grad, dr, d2r);
  const double lambda2 = std::exp(2.0 * phi.value);
  const double K = model.curvature();
  const double ratio = cn_curv(K, rd.r) / sn_curv(K, rd.r);
  const Mat A = cov - ratio * (lambda2 * I - dr * dr.transpose());
  // g = lambda^2 I, so the g-orthonormal frame rescales A by 1/lambda^2.
  Eigen::SelfAdjointEigenSolver<Mat> es(A / lambda2, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double gauss_curvature(const SpaceFormModel& model, const Vec& x) {
  if (model.dim() != 2) fail(ErrorKind::unsupported, "Gauss curvature requires n = 2");
  model.require_in_chart(x);
  const Jet phi = model.log_factor(x);
  return -std::exp(-2.0 * phi.value) * phi.hess.trace();
}

double ricci_factor(const SpaceFormModel& model, const Vec& x) {
  if (model.is_space_form()) return (model.dim() - 1) * model.curvature();
  if (model.dim() != 2)
    fail(ErrorKind::unsupported, "Ricci curvature of custom metrics is only available for n = 2");
  return gauss_curvature(model, x);
}

}  // namespace sfw
