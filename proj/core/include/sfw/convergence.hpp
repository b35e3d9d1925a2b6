#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sfw {

/// Three-valued outcome of a discretised claim.
enum class Verdict { holds, violated, inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// log(e_coarse / e_fine) / log(h_coarse / h_fine).
double convergence_order(double e_coarse, double e_fine, double h_coarse, double h_fine);

/// Orders between consecutive levels (size n - 1) of |errors|.
std::vector<double> consecutive_orders(std::span<const double> h, std::span<const double> errors);

/// Order between the first and last level of |errors|.
double overall_order(std::span<const double> h, std::span<const double> errors);

/// True when an error sequence has converged at least at min_order from the
/// first to the last level, treating values at or below `floor` as
/// converged (roundoff-limited sequences have no meaningful order).
bool converges_with_order(std::span<const double> h, std::span<const double> errors,
                          double min_order, double floor);

struct Extrapolation {
  double value = 0.0;           ///< continuum-limit estimate
  double error_estimate = 0.0;  ///< |value - finest level value|, at least a roundoff floor
  double order = 0.0;           ///< observed (or nominal) order used
  bool asymptotic = false;      ///< true when the last three levels behave monotonically
};

/// Richardson extrapolation from the last three levels (two levels fall back
/// to the nominal order; one level returns the value with an unbounded error).
Extrapolation richardson(std::span<const double> h, std::span<const double> values,
                         double nominal_order);

struct VerdictDetail {
  Verdict verdict = Verdict::inconclusive;
  Extrapolation extrapolation;
  double order = 0.0;   ///< first-to-last observed order (equality claims)
  double finest = 0.0;  ///< value at the finest level
  std::string reason;
};

/// A discrepancy that must vanish in the continuum limit. Holds when the
/// finest |value| is at most `threshold` and the sequence converges with at
/// least `min_order` (values at or below `floor` count as converged).
/// Violated only when the extrapolated |value| exceeds both the threshold
/// and three times its error estimate.
VerdictDetail equality_verdict(std::span<const double> h, std::span<const double> values,
                               double threshold, double min_order, double floor);

/// A gap that must be non-negative (strict: positive). Violated only when
/// the extrapolated gap is below -3 error estimates and below -tolerance.
/// A strict claim holds when the extrapolated gap exceeds 3 error
/// estimates; a non-strict claim holds unless violated.
VerdictDetail inequality_verdict(std::span<const double> h, std::span<const double> gaps,
                                 bool strict, double tolerance);

}  // namespace sfw
