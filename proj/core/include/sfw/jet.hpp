#pragma once

#include <cmath>

#include "sfw/linalg.hpp"

namespace sfw {

/// Value, chart gradient and chart Hessian of a scalar function at a point.
///
/// Arithmetic propagates exact second-order derivatives (forward-mode
/// automatic differentiation truncated at order two).
struct Jet {
  double value = 0.0;
  Vec grad;
  Mat hess;

  Jet() = default;
  explicit Jet(int dim, double v = 0.0)
      : value(v), grad(Vec::Zero(dim)), hess(Mat::Zero(dim, dim)) {}

  static Jet constant(int dim, double v) { return Jet(dim, v); }
  static Jet variable(int dim, int index, double v) {
    Jet j(dim, v);
    j.grad(index) = 1.0;
    return j;
  }

  int dim() const { return static_cast<int>(grad.size()); }

  /// Applies a scalar function with known first and second derivatives.
  Jet apply(double f, double df, double d2f) const {
    Jet out;
    out.value = f;
    out.grad = df * grad;
    out.hess = df * hess + d2f * (grad * grad.transpose());
    return out;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet out;
  out.value = a.value + b.value;
  out.grad = a.grad + b.grad;
  out.hess = a.hess + b.hess;
  return out;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet out;
  out.value = a.value - b.value;
  out.grad = a.grad - b.grad;
  out.hess = a.hess - b.hess;
  return out;
}

inline Jet operator-(const Jet& a) {
  Jet out;
  out.value = -a.value;
  out.grad = -a.grad;
  out.hess = -a.hess;
  return out;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet out;
  out.value = a.value * b.value;
  out.grad = a.value * b.grad + b.value * a.grad;
  out.hess = a.value * b.hess + b.value * a.hess +
             a.grad * b.grad.transpose() + b.grad * a.grad.transpose();
  return out;
}

inline Jet operator*(double s, const Jet& a) {
  Jet out;
  out.value = s * a.value;
  out.grad = s * a.grad;
  out.hess = s * a.hess;
  return out;
}

inline Jet reciprocal(const Jet& a) {
  const double v = a.value;
  return a.apply(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

inline Jet exp(const Jet& a) {
  const double e = std::exp(a.value);
  return a.apply(e, e, e);
}

inline Jet log(const Jet& a) {
  const double v = a.value;
  return a.apply(std::log(v), 1.0 / v, -1.0 / (v * v));
}

/// a^p for a constant exponent p. Nonnegative integer exponents are exact at
/// a = 0 and for negative bases.
inline Jet pow(const Jet& a, double p) {
  const double v = a.value;
  if (p >= 0.0 && p == std::floor(p) && p <= 64.0) {
    const int k = static_cast<int>(p);
    auto ipow = [](double base, int e) {
      double r = 1.0;
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    };
    const double d1 = k >= 1 ? k * ipow(v, k - 1) : 0.0;
    const double d2 = k >= 2 ? k * (k - 1) * ipow(v, k - 2) : 0.0;
    return a.apply(ipow(v, k), d1, d2);
  }
  return a.apply(std::pow(v, p), p * std::pow(v, p - 1.0),
                 p * (p - 1.0) * std::pow(v, p - 2.0));
}

}  // namespace sfw
