#include "sfw/field_eval.hpp"

#include "sfw/error.hpp"
#include "sfw/space_form.hpp"

namespace sfw {

FieldEvaluator::FieldEvaluator(const DomainMesh& mesh, const SpaceFormModel& model,
                               const Weight& source)
    : mesh_(&mesh), model_(&model) {
  if (std::holds_alternative<SpaceFormPotential>(source)) {
    if (!model.is_space_form())
      fail(ErrorKind::missing_prerequisite,
           "the space-form potential needs a space-form model; pass a distance-based field instead");
  } else if (const auto* e = std::get_if<Expression>(&source)) {
    if (e->dim() != 2) fail(ErrorKind::usage, "weight expression must be two-dimensional");
    expr_ = *e;
  } else {
    const ScalarField& f = std::get<ScalarField>(source);
    if (&f.mesh() != &mesh) fail(ErrorKind::usage, "weight field lives on a different mesh");
    nodal_.assign(f.values().begin(), f.values().end());
    derivs_ = recover_derivatives(f);
  }
}

FieldEvaluator::FieldEvaluator(const ScalarField& field)
    : mesh_(&field.mesh()), model_(&field.mesh().model()) {
  nodal_.assign(field.values().begin(), field.values().end());
  derivs_ = recover_derivatives(field);
}

PointDerivatives FieldEvaluator::analytic_at(const Vec2& x) const {
  PointDerivatives out;
  if (expr_) {
    const Jet j = expr_->jet(Vec(x));
    out.value = j.value;
    out.grad = j.grad;
    out.hess = j.hess;
  } else {
    const PotentialSample p = distance_and_potential(*model_, Vec(x));
    out.value = p.V;
    out.grad = p.grad;
    out.hess = p.chart_hess;
  }
  return out;
}

PointDerivatives FieldEvaluator::at(const QuadratureScheme::CellPoint& p) const {
  if (!derivs_) return analytic_at(p.x);
  const Cell& c = mesh_->cells()[static_cast<std::size_t>(p.cell)];
  PointDerivatives out;
  for (int i = 0; i < 3; ++i) {
    const auto v = static_cast<std::size_t>(c[static_cast<std::size_t>(i)]);
    const double b = p.bary[static_cast<std::size_t>(i)];
    out.value += b * nodal_[v];
    out.grad += b * (*derivs_)[v].grad;
    out.hess += b * (*derivs_)[v].hess;
  }
  return out;
}

PointDerivatives FieldEvaluator::at_vertex(int v) const {
  if (!derivs_) return analytic_at(mesh_->vertices()[static_cast<std::size_t>(v)]);
  const auto i = static_cast<std::size_t>(v);
  return {nodal_[i], (*derivs_)[i].grad, (*derivs_)[i].hess};
}

}  // namespace sfw
