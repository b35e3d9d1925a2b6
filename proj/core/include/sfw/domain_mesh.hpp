#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sfw/linalg.hpp"
#include "sfw/space_form.hpp"

namespace sfw {

/// Chart radius of the boundary as a function of the polar angle.
class RadialProfile {
 public:
  enum class Kind { fourier, ellipse };

  static constexpr int kMaxHarmonic = 8;

  /// rho = a0 + sum_k cos_coeffs[k-1] cos(k t) + sin_coeffs[k-1] sin(k t).
  static RadialProfile fourier(double a0, std::vector<double> cos_coeffs,
                               std::vector<double> sin_coeffs = {});
  static RadialProfile circle(double radius) { return fourier(radius, {}, {}); }
  /// Axis-aligned ellipse with semi-axes a (x1) and b (x2).
  static RadialProfile ellipse(double a, double b);

  Kind kind() const { return kind_; }
  double a0() const { return a0_; }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }
  double semi_axis_a() const { return ea_; }
  double semi_axis_b() const { return eb_; }

  double operator()(double theta) const;
  /// Point on the boundary curve in chart coordinates.
  Vec2 point(double theta) const;

  /// Dense-sample extremes (4096 directions).
  double min_radius() const;
  double max_radius() const;

 private:
  Kind kind_ = Kind::fourier;
  double a0_ = 0.0;
  std::vector<double> cos_, sin_;
  double ea_ = 0.0, eb_ = 0.0;
};

/// Chart radius of the geodesic sphere of radius R about the origin.
double chart_radius_of_geodesic_ball(const SpaceFormModel& model, double R);

/// Star-shaped domain about the chart origin.
struct StarDomainSpec {
  int dim = 2;
  RadialProfile profile = RadialProfile::circle(0.5);
  int level = 0;       ///< refinement level; mesh size ~ 2^-level * base size
  int base_rings = 4;  ///< rings of the level-0 lattice (6 * rings^2 cells)
};

using Cell = std::array<int, 3>;
using Facet = std::array<int, 2>;

/// Immutable triangulation of a star-shaped domain with an ordered,
/// counter-clockwise boundary polygon whose vertices lie on the profile.
class DomainMesh {
 public:
  const StarDomainSpec& spec() const { return spec_; }
  const SpaceFormModel& model() const { return model_; }
  int level() const { return spec_.level; }
  int dim() const { return 2; }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<Cell>& cells() const { return cells_; }
  /// Outward-oriented boundary edges (domain interior on the left).
  const std::vector<Facet>& boundary_facets() const { return facets_; }
  /// Boundary vertices in counter-clockwise order; facet i joins entries i, i+1.
  const std::vector<int>& boundary_vertices() const { return boundary_vertices_; }
  /// Polar angle of each boundary vertex, uniformly spaced.
  const std::vector<double>& boundary_params() const { return boundary_params_; }
  /// Boundary index of each mesh vertex or -1 for interior vertices.
  const std::vector<int>& boundary_vertex_map() const { return boundary_map_; }
  /// Cell owning each boundary facet.
  const std::vector<int>& facet_cells() const { return facet_cells_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t cell_count() const { return cells_.size(); }

  /// Sorted vertex neighbours (CSR layout).
  std::span<const int> neighbors(int v) const {
    return {adjacency_.data() + adjacency_offsets_[static_cast<std::size_t>(v)],
            adjacency_.data() + adjacency_offsets_[static_cast<std::size_t>(v) + 1]};
  }

  double h_max() const { return h_max_; }
  double h_min() const { return h_min_; }

  double flat_area(int cell) const;
  double metric_area(int cell) const;
  double metric_edge_length(int a, int b) const;

 private:
  friend DomainMesh build_mesh(const StarDomainSpec&, const SpaceFormModel&);
  friend DomainMesh refine(const DomainMesh&);

  DomainMesh(StarDomainSpec spec, SpaceFormModel model)
      : spec_(std::move(spec)), model_(std::move(model)) {}
  void finalize();

  StarDomainSpec spec_;
  SpaceFormModel model_;
  std::vector<Vec2> vertices_;
  std::vector<Cell> cells_;
  std::vector<Facet> facets_;
  std::vector<int> boundary_vertices_;
  std::vector<double> boundary_params_;
  std::vector<int> boundary_map_;
  std::vector<int> facet_cells_;
  std::vector<int> adjacency_;
  std::vector<std::size_t> adjacency_offsets_;
  double h_max_ = 0.0;
  double h_min_ = 0.0;
};

/// Builds the level-0 lattice and refines spec.level times.
DomainMesh build_mesh(const StarDomainSpec& spec, const SpaceFormModel& model);

/// Regular 1:4 split; new boundary vertices are placed on the profile at
/// the angular midpoint.
DomainMesh refine(const DomainMesh& mesh);

}  // namespace sfw
