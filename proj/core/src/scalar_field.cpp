#include "sfw/scalar_field.hpp"

#include <cmath>

#include "sfw/error.hpp"

namespace sfw {

ScalarField::ScalarField(const DomainMesh& mesh, std::vector<double> values, FieldTag tag)
    : mesh_(&mesh), values_(std::move(values)), tag_(tag) {
  if (values_.size() != mesh.vertex_count())
    fail(ErrorKind::usage, "field has " + std::to_string(values_.size()) + " values for " +
                               std::to_string(mesh.vertex_count()) + " vertices");
  for (double v : values_)
    if (!std::isfinite(v)) fail(ErrorKind::usage, "field contains non-finite values");
}

ScalarField ScalarField::sample(const DomainMesh& mesh,
                                const std::function<double(const Vec2&)>& fn, FieldTag tag) {
  std::vector<double> v;
  v.reserve(mesh.vertex_count());
  for (const Vec2& x : mesh.vertices()) v.push_back(fn(x));
  return ScalarField(mesh, std::move(v), tag);
}

ScalarField ScalarField::sample(const DomainMesh& mesh, const Expression& expr, FieldTag tag) {
  return sample(mesh, [&](const Vec2& x) { return expr.value(Vec(x)); }, tag);
}

ScalarField ScalarField::combine(double alpha, const ScalarField& a, double beta,
                                 const ScalarField& b) {
  if (&a.mesh() != &b.mesh()) fail(ErrorKind::usage, "fields live on different meshes");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = alpha * a[i] + beta * b[i];
  return ScalarField(a.mesh(), std::move(v), a.tag());
}

}  // namespace sfw
