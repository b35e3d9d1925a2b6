#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "sfw/expression.hpp"
#include "sfw/quadrature.hpp"
#include "sfw/recovery.hpp"
#include "sfw/scalar_field.hpp"

namespace sfw {

/// Chart value, partials and second partials at a point.
struct PointDerivatives {
  double value = 0.0;
  Vec2 grad = Vec2::Zero();
  Mat2 hess = Mat2::Zero();
};

/// The space-form potential V = cosh r / 1 / cos r with analytic derivatives.
struct SpaceFormPotential {};

/// A weight function: analytic potential, analytic expression, or samples.
using Weight = std::variant<SpaceFormPotential, Expression, ScalarField>;

/// Evaluates a discrete field (nodal values plus recovered derivatives,
/// linearly interpolated) or an analytic function at cell quadrature points
/// and at mesh vertices.
class FieldEvaluator {
 public:
  FieldEvaluator(const DomainMesh& mesh, const SpaceFormModel& model, const Weight& source);
  FieldEvaluator(const ScalarField& field);

  bool analytic() const { return !derivs_.has_value(); }

  PointDerivatives at(const QuadratureScheme::CellPoint& p) const;
  PointDerivatives at_vertex(int v) const;

  std::span<const VertexDerivatives> vertex_derivatives() const { return *derivs_; }

 private:
  PointDerivatives analytic_at(const Vec2& x) const;

  const DomainMesh* mesh_;
  const SpaceFormModel* model_;
  std::optional<Expression> expr_;
  std::vector<double> nodal_;
  std::optional<std::vector<VertexDerivatives>> derivs_;
};

}  // namespace sfw
