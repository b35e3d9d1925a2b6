#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sfw/jet.hpp"

namespace sfw {

namespace detail {
struct ExprNode;
}

/// A smooth scalar expression in chart coordinates, differentiated exactly.
///
/// Grammar: sums, products, quotients, powers (`^`), unary minus, numeric
/// literals, the coordinates `x1`, `x2`, `x3` (aliases `x`, `y`, `z`), `r2`
/// for the squared chart radius, and the functions exp, log, sqrt, sin, cos,
/// tan, sinh, cosh, tanh, atan, atanh.
class Expression {
 public:
  /// One monomial c * x1^e1 * x2^e2 * ... of a polynomial table.
  struct Monomial {
    std::vector<int> exponents;
    double coefficient = 0.0;
  };

  Expression() = default;

  /// Throws Error(parse) with the offending column on malformed input.
  static Expression parse(const std::string& source, int dim);
  static Expression constant(double value, int dim);
  static Expression polynomial(const std::vector<Monomial>& terms, int dim);

  int dim() const { return dim_; }
  bool empty() const { return root_ == nullptr; }
  const std::string& source() const { return source_; }

  double value(const Vec& x) const;
  Jet jet(const Vec& x) const;

 private:
  Expression(std::shared_ptr<const detail::ExprNode> root, int dim,
             std::string source)
      : root_(std::move(root)), dim_(dim), source_(std::move(source)) {}

  std::shared_ptr<const detail::ExprNode> root_;
  int dim_ = 0;
  std::string source_;
};

}  // namespace sfw
