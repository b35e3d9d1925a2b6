#include "sfw/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfw/error.hpp"

namespace sfw {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds_within_tolerance";
    case Verdict::violated: return "violated_beyond_tolerance";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

double convergence_order(double e_coarse, double e_fine, double h_coarse, double h_fine) {
  return std::log(std::abs(e_coarse) / std::abs(e_fine)) / std::log(h_coarse / h_fine);
}

std::vector<double> consecutive_orders(std::span<const double> h, std::span<const double> errors) {
  if (h.size() != errors.size()) fail(ErrorKind::usage, "h and error sequences differ in length");
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    out.push_back(convergence_order(errors[i], errors[i + 1], h[i], h[i + 1]));
  return out;
}

double overall_order(std::span<const double> h, std::span<const double> errors) {
  if (h.size() != errors.size() || h.size() < 2)
    fail(ErrorKind::usage, "order needs at least two levels of matching length");
  return convergence_order(errors.front(), errors.back(), h.front(), h.back());
}

bool converges_with_order(std::span<const double> h, std::span<const double> errors,
                          double min_order, double floor) {
  if (std::abs(errors.back()) <= floor) return true;
  return overall_order(h, errors) >= min_order;
}

Extrapolation richardson(std::span<const double> h, std::span<const double> values,
                         double nominal_order) {
  if (h.size() != values.size() || h.empty())
    fail(ErrorKind::usage, "extrapolation needs matching, non-empty sequences");
  Extrapolation ex;
  const std::size_t n = values.size();
  const double tiny = 64.0 * std::numeric_limits<double>::epsilon();
  if (n == 1) {
    ex.value = values[0];
    ex.error_estimate = std::numeric_limits<double>::infinity();
    ex.order = nominal_order;
    return ex;
  }
  const double v3 = values[n - 1], v2 = values[n - 2];
  const double r = h[n - 2] / h[n - 1];
  const double d2 = v3 - v2;
  double p = nominal_order;
  if (n >= 3) {
    const double d1 = v2 - values[n - 3];
    if (d1 != 0.0 && d2 != 0.0 && (d1 > 0) == (d2 > 0) && std::abs(d2) < std::abs(d1)) {
      const double r1 = h[n - 3] / h[n - 2];
      // Equal ratios are the norm; the mean ratio handles slight drift.
      p = std::log(std::abs(d1) / std::abs(d2)) / std::log(0.5 * (r + r1));
      p = std::clamp(p, 0.5, 6.0);
      ex.asymptotic = true;
    }
  }
  ex.order = p;
  ex.value = v3 + d2 / (std::pow(r, p) - 1.0);
  ex.error_estimate = std::abs(ex.value - v3);
  if (!ex.asymptotic) ex.error_estimate = std::max(ex.error_estimate, std::abs(d2));
  ex.error_estimate = std::max(ex.error_estimate, tiny * std::abs(v3));
  return ex;
}

VerdictDetail equality_verdict(std::span<const double> h, std::span<const double> values,
                               double threshold, double min_order, double floor) {
  VerdictDetail d;
  std::vector<double> mags(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) mags[i] = std::abs(values[i]);
  for (double v : mags)
    if (!std::isfinite(v)) {
      d.reason = "non-finite value";
      return d;
    }
  d.finest = mags.back();
  d.extrapolation = richardson(h, mags, 1.0);
  d.order = mags.size() >= 2 ? overall_order(h, mags) : 0.0;
  const bool converged = mags.size() >= 2 && converges_with_order(h, mags, min_order, floor);
  if (d.finest <= threshold && converged) {
    d.verdict = Verdict::holds;
    d.reason = "finest value within threshold and converging";
    return d;
  }
  const Extrapolation& ex = d.extrapolation;
  if (std::abs(ex.value) > threshold && std::abs(ex.value) > 3.0 * ex.error_estimate) {
    d.verdict = Verdict::violated;
    d.reason = "extrapolated discrepancy exceeds threshold and 3x its error estimate";
    return d;
  }
  d.reason = d.finest > threshold ? "finest value above threshold" : "observed order below minimum";
  return d;
}

VerdictDetail inequality_verdict(std::span<const double> h, std::span<const double> gaps,
                                 bool strict, double tolerance) {
  VerdictDetail d;
  for (double v : gaps)
    if (!std::isfinite(v)) {
      d.reason = "non-finite value";
      return d;
    }
  d.finest = gaps.back();
  d.extrapolation = richardson(h, gaps, 1.0);
  const Extrapolation& ex = d.extrapolation;
  d.order = ex.order;
  if (ex.value < -3.0 * ex.error_estimate && ex.value < -tolerance) {
    d.verdict = Verdict::violated;
    d.reason = "extrapolated gap negative beyond 3x its error estimate";
    return d;
  }
  if (!strict) {
    d.verdict = Verdict::holds;
    d.reason = "extrapolated gap non-negative within error";
    return d;
  }
  if (ex.value > 3.0 * ex.error_estimate) {
    d.verdict = Verdict::holds;
    d.reason = "extrapolated gap exceeds 3x its error estimate";
    return d;
  }
  d.reason = "extrapolated gap not separated from zero";
  return d;
}

}  // namespace sfw
