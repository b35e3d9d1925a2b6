#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sfw {

enum class ErrorKind {
  domain,                ///< point or profile outside the chart domain
  spec,                  ///< malformed domain / model specification
  missing_prerequisite,  ///< e.g. custom metric without a distance field
  singularity,           ///< evaluation at a coordinate pole
  recovery,              ///< derivative recovery patch too small
  geometry,              ///< degenerate boundary element
  usage,                 ///< API misuse (region/scheme mismatch, bad argument)
  unsupported,           ///< configuration outside the implemented scope
  indefinite,            ///< Krylov solver met non-positive curvature
  iteration,             ///< Krylov solver did not converge
  parse,                 ///< expression or configuration parse failure
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class IndefiniteError : public Error {
 public:
  IndefiniteError(const std::string& what, int iteration, double curvature)
      : Error(ErrorKind::indefinite, what),
        iteration_(iteration),
        curvature_(curvature) {}
  int iteration() const noexcept { return iteration_; }
  /// Value of p^T A p (or r^T M^{-1} r) that triggered the failure.
  double curvature() const noexcept { return curvature_; }

 private:
  int iteration_;
  double curvature_;
};

class IterationError : public Error {
 public:
  IterationError(const std::string& what, std::vector<double> history)
      : Error(ErrorKind::iteration, what), history_(std::move(history)) {}
  const std::vector<double>& residual_history() const noexcept {
    return history_;
  }

 private:
  std::vector<double> history_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace sfw
