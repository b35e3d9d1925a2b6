#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sfw/domain_mesh.hpp"
#include "sfw/expression.hpp"

namespace sfw {

enum class FieldTag { solution, potential, custom };

/// Per-vertex samples of a function on a mesh. The mesh must outlive the field.
class ScalarField {
 public:
  ScalarField(const DomainMesh& mesh, std::vector<double> values,
              FieldTag tag = FieldTag::custom);

  static ScalarField sample(const DomainMesh& mesh, const std::function<double(const Vec2&)>& fn,
                            FieldTag tag = FieldTag::custom);
  static ScalarField sample(const DomainMesh& mesh, const Expression& expr,
                            FieldTag tag = FieldTag::custom);

  const DomainMesh& mesh() const { return *mesh_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  FieldTag tag() const { return tag_; }

  /// alpha * a + beta * b on the same mesh.
  static ScalarField combine(double alpha, const ScalarField& a, double beta, const ScalarField& b);

 private:
  const DomainMesh* mesh_;
  std::vector<double> values_;
  FieldTag tag_;
};

}  // namespace sfw
