#include "sfw/domain_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "sfw/error.hpp"
#include "sfw/quadrature.hpp"

namespace sfw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kProfileSamples = 4096;

}  // namespace

RadialProfile RadialProfile::fourier(double a0, std::vector<double> cos_coeffs,
                                     std::vector<double> sin_coeffs) {
  if (static_cast<int>(cos_coeffs.size()) > kMaxHarmonic ||
      static_cast<int>(sin_coeffs.size()) > kMaxHarmonic)
    fail(ErrorKind::spec, "radial profile supports harmonics k <= 8");
  RadialProfile p;
  p.kind_ = Kind::fourier;
  p.a0_ = a0;
  p.cos_ = std::move(cos_coeffs);
  p.sin_ = std::move(sin_coeffs);
  return p;
}

RadialProfile RadialProfile::ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail(ErrorKind::spec, "ellipse semi-axes must be positive");
  RadialProfile p;
  p.kind_ = Kind::ellipse;
  p.ea_ = a;
  p.eb_ = b;
  return p;
}

double RadialProfile::operator()(double theta) const {
  if (kind_ == Kind::ellipse) {
    const double c = eb_ * std::cos(theta);
    const double s = ea_ * std::sin(theta);
    return ea_ * eb_ / std::sqrt(c * c + s * s);
  }
  double r = a0_;
  for (std::size_t k = 0; k < cos_.size(); ++k)
    r += cos_[k] * std::cos(static_cast<double>(k + 1) * theta);
  for (std::size_t k = 0; k < sin_.size(); ++k)
    r += sin_[k] * std::sin(static_cast<double>(k + 1) * theta);
  return r;
}

Vec2 RadialProfile::point(double theta) const {
  const double r = (*this)(theta);
  return {r * std::cos(theta), r * std::sin(theta)};
}

double RadialProfile::min_radius() const {
  double m = (*this)(0.0);
  for (int i = 1; i < kProfileSamples; ++i) m = std::min(m, (*this)(kTwoPi * i / kProfileSamples));
  return m;
}

double RadialProfile::max_radius() const {
  double m = (*this)(0.0);
  for (int i = 1; i < kProfileSamples; ++i) m = std::max(m, (*this)(kTwoPi * i / kProfileSamples));
  return m;
}

double chart_radius_of_geodesic_ball(const SpaceFormModel& model, double R) {
  if (!(R > 0.0)) fail(ErrorKind::spec, "geodesic radius must be positive");
  switch (model.kind()) {
    case SpaceFormKind::euclidean: return R;
    case SpaceFormKind::hyperbolic: return std::tanh(0.5 * R);
    case SpaceFormKind::spherical: return std::tan(0.5 * R);
    case SpaceFormKind::custom: break;
  }
  fail(ErrorKind::unsupported, "geodesic balls have no closed-form chart radius in custom metrics");
}

namespace {

/// Chart-radius fraction of the ring at geodesic fraction t along a ray of
/// chart length rho, so that base rings are evenly spaced in the metric.
double ring_scale(const SpaceFormModel& model, double rho, double t) {
  switch (model.kind()) {
    case SpaceFormKind::hyperbolic: return std::tanh(t * std::atanh(rho)) / rho;
    case SpaceFormKind::spherical: return std::tan(t * std::atan(rho)) / rho;
    case SpaceFormKind::euclidean:
    case SpaceFormKind::custom: break;
  }
  return t;
}

}  // namespace

double DomainMesh::flat_area(int cell) const {
  const Cell& c = cells_[static_cast<std::size_t>(cell)];
  const Vec2 e1 = vertices_[static_cast<std::size_t>(c[1])] - vertices_[static_cast<std::size_t>(c[0])];
  const Vec2 e2 = vertices_[static_cast<std::size_t>(c[2])] - vertices_[static_cast<std::size_t>(c[0])];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

double DomainMesh::metric_area(int cell) const {
  const auto& rule = triangle_rule();
  const Cell& c = cells_[static_cast<std::size_t>(cell)];
  double sum = 0.0;
  for (int q = 0; q < TriangleRule::kPoints; ++q) {
    const auto& b = rule.bary[static_cast<std::size_t>(q)];
    const Vec2 x = b[0] * vertices_[static_cast<std::size_t>(c[0])] +
                   b[1] * vertices_[static_cast<std::size_t>(c[1])] +
                   b[2] * vertices_[static_cast<std::size_t>(c[2])];
    const double l = model_.factor(Vec(x));
    sum += rule.weights[static_cast<std::size_t>(q)] * l * l;
  }
  return flat_area(cell) * sum;
}

double DomainMesh::metric_edge_length(int a, int b) const {
  const auto& rule = segment_rule();
  const Vec2& pa = vertices_[static_cast<std::size_t>(a)];
  const Vec2& pb = vertices_[static_cast<std::size_t>(b)];
  double sum = 0.0;
  for (int q = 0; q < 3; ++q) {
    const double t = rule.nodes[static_cast<std::size_t>(q)];
    sum += rule.weights[static_cast<std::size_t>(q)] * model_.factor(Vec((1.0 - t) * pa + t * pb));
  }
  return (pb - pa).norm() * sum;
}

void DomainMesh::finalize() {
  const std::size_t nv = vertices_.size();
  for (const Vec2& v : vertices_) model_.require_in_chart(Vec(v));

  boundary_map_.assign(nv, -1);
  for (std::size_t j = 0; j < boundary_vertices_.size(); ++j)
    boundary_map_[static_cast<std::size_t>(boundary_vertices_[j])] = static_cast<int>(j);
  facets_.clear();
  const std::size_t nb = boundary_vertices_.size();
  for (std::size_t j = 0; j < nb; ++j)
    facets_.push_back({boundary_vertices_[j], boundary_vertices_[(j + 1) % nb]});

  // Orientation and positivity; every cell must have positive flat (hence
  // metric) area since lambda > 0.
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (flat_area(static_cast<int>(c)) <= 0.0) {
      Cell& cell = cells_[c];
      std::swap(cell[1], cell[2]);
      if (flat_area(static_cast<int>(c)) <= 0.0) {
        std::ostringstream os;
        os << "degenerate cell " << c << " at refinement level " << spec_.level;
        fail(ErrorKind::geometry, os.str());
      }
    }
  }

  // Edge -> owning cells, adjacency, metric edge extremes.
  std::unordered_map<std::uint64_t, int> edge_cell;
  edge_cell.reserve(cells_.size() * 3);
  std::vector<std::vector<int>> adj(nv);
  auto key = [](int a, int b) {
    const auto lo = static_cast<std::uint64_t>(std::min(a, b));
    const auto hi = static_cast<std::uint64_t>(std::max(a, b));
    return (lo << 32) | hi;
  };
  h_max_ = 0.0;
  h_min_ = std::numeric_limits<double>::infinity();
  std::unordered_map<std::uint64_t, int> edge_count;
  edge_count.reserve(cells_.size() * 3);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const Cell& cell = cells_[c];
    for (int e = 0; e < 3; ++e) {
      const int a = cell[static_cast<std::size_t>(e)];
      const int b = cell[static_cast<std::size_t>((e + 1) % 3)];
      const auto k = key(a, b);
      if (++edge_count[k] == 1) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        const double len = metric_edge_length(a, b);
        h_max_ = std::max(h_max_, len);
        h_min_ = std::min(h_min_, len);
      }
      edge_cell[k] = static_cast<int>(c);
    }
  }
  facet_cells_.clear();
  for (const Facet& f : facets_) {
    const auto k = key(f[0], f[1]);
    auto it = edge_count.find(k);
    if (it == edge_count.end() || it->second != 1)
      fail(ErrorKind::geometry, "boundary facet is not owned by exactly one cell");
    facet_cells_.push_back(edge_cell[k]);
  }
  std::size_t open_edges = 0;
  for (const auto& [k, count] : edge_count) {
    if (count > 2) fail(ErrorKind::geometry, "non-manifold edge in mesh");
    if (count == 1) ++open_edges;
  }
  if (open_edges != facets_.size())
    fail(ErrorKind::geometry, "mesh has open edges that are not boundary facets");

  adjacency_offsets_.assign(nv + 1, 0);
  adjacency_.clear();
  for (std::size_t v = 0; v < nv; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    adjacency_.insert(adjacency_.end(), list.begin(), list.end());
    adjacency_offsets_[v + 1] = adjacency_.size();
  }
}

DomainMesh build_mesh(const StarDomainSpec& spec, const SpaceFormModel& model) {
  if (spec.dim == 3)
    fail(ErrorKind::unsupported, "three-dimensional domains are not implemented; use n = 2");
  if (spec.dim != 2) fail(ErrorKind::spec, "domain dimension must be 2");
  if (model.dim() != spec.dim) fail(ErrorKind::spec, "model and domain dimensions differ");
  if (spec.level < 0) fail(ErrorKind::spec, "refinement level must be >= 0");
  if (spec.base_rings < 2) fail(ErrorKind::spec, "base mesh needs at least 2 rings");
  const double rmin = spec.profile.min_radius();
  if (!(rmin > 0.0)) {
    std::ostringstream os;
    os << "radial profile must be positive; minimum sampled radius is " << rmin;
    fail(ErrorKind::spec, os.str());
  }
  const double rmax = spec.profile.max_radius();
  if (!(rmax < model.chart_radius())) {
    std::ostringstream os;
    os.precision(17);
    os << "radial profile reaches chart radius " << rmax << ", outside the "
       << to_string(model.kind()) << " chart of radius " << model.chart_radius();
    fail(ErrorKind::domain, os.str());
  }

  StarDomainSpec base_spec = spec;
  base_spec.level = 0;
  DomainMesh mesh(base_spec, model);
  const int m = spec.base_rings;
  auto ring_offset = [](int k) { return k == 0 ? 0 : 1 + 3 * k * (k - 1); };

  mesh.vertices_.push_back(Vec2::Zero());
  for (int k = 1; k <= m; ++k) {
    const int count = 6 * k;
    for (int j = 0; j < count; ++j) {
      const double theta = kTwoPi * j / count;
      const Vec2 tip = spec.profile.point(theta);
      mesh.vertices_.push_back(ring_scale(model, tip.norm(), static_cast<double>(k) / m) * tip);
    }
  }
  for (int k = 1; k <= m; ++k) {
    const int outer = ring_offset(k);
    const int inner = ring_offset(k - 1);
    const int nout = 6 * k;
    const int nin = std::max(1, 6 * (k - 1));
    for (int s = 0; s < 6; ++s) {
      for (int t = 0; t < k; ++t) {
        const int o0 = outer + (s * k + t) % nout;
        const int o1 = outer + (s * k + t + 1) % nout;
        const int i0 = k == 1 ? 0 : inner + (s * (k - 1) + t) % nin;
        mesh.cells_.push_back({o0, o1, i0});
      }
      for (int t = 0; t + 1 < k; ++t) {
        const int i0 = inner + (s * (k - 1) + t) % nin;
        const int i1 = inner + (s * (k - 1) + t + 1) % nin;
        const int o1 = outer + (s * k + t + 1) % nout;
        mesh.cells_.push_back({i0, o1, i1});
      }
    }
  }
  const int nb = 6 * m;
  for (int j = 0; j < nb; ++j) {
    mesh.boundary_vertices_.push_back(ring_offset(m) + j);
    mesh.boundary_params_.push_back(kTwoPi * j / nb);
  }
  mesh.finalize();

  for (int l = 0; l < spec.level; ++l) mesh = refine(mesh);
  return mesh;
}

DomainMesh refine(const DomainMesh& mesh) {
  StarDomainSpec spec = mesh.spec_;
  spec.level += 1;
  DomainMesh out(spec, mesh.model_);
  out.vertices_ = mesh.vertices_;

  const auto& old_bv = mesh.boundary_vertices_;
  const auto& old_bt = mesh.boundary_params_;
  const std::size_t nb = old_bv.size();
  std::unordered_map<std::uint64_t, int> midpoint;
  midpoint.reserve(mesh.cells_.size() * 2);
  auto key = [](int a, int b) {
    const auto lo = static_cast<std::uint64_t>(std::min(a, b));
    const auto hi = static_cast<std::uint64_t>(std::max(a, b));
    return (lo << 32) | hi;
  };

  // Boundary midpoints first so that they sit on the profile.
  out.boundary_vertices_.reserve(2 * nb);
  out.boundary_params_.reserve(2 * nb);
  for (std::size_t j = 0; j < nb; ++j) {
    const int a = old_bv[j];
    const int b = old_bv[(j + 1) % nb];
    double ta = old_bt[j];
    double tb = old_bt[(j + 1) % nb];
    if (tb <= ta) tb += kTwoPi;
    const double tm = 0.5 * (ta + tb);
    const int id = static_cast<int>(out.vertices_.size());
    out.vertices_.push_back(spec.profile.point(tm));
    midpoint[key(a, b)] = id;
    out.boundary_vertices_.push_back(a);
    out.boundary_params_.push_back(ta);
    out.boundary_vertices_.push_back(id);
    out.boundary_params_.push_back(tm >= kTwoPi ? tm - kTwoPi : tm);
  }

  auto mid = [&](int a, int b) {
    const auto k = key(a, b);
    auto it = midpoint.find(k);
    if (it != midpoint.end()) return it->second;
    const int id = static_cast<int>(out.vertices_.size());
    out.vertices_.push_back(0.5 * (out.vertices_[static_cast<std::size_t>(a)] +
                                   out.vertices_[static_cast<std::size_t>(b)]));
    midpoint.emplace(k, id);
    return id;
  };

  out.cells_.reserve(4 * mesh.cells_.size());
  for (const Cell& c : mesh.cells_) {
    const int ab = mid(c[0], c[1]);
    const int bc = mid(c[1], c[2]);
    const int ca = mid(c[2], c[0]);
    out.cells_.push_back({c[0], ab, ca});
    out.cells_.push_back({ab, c[1], bc});
    out.cells_.push_back({ca, bc, c[2]});
    out.cells_.push_back({ab, bc, ca});
  }
  out.finalize();
  return out;
}

}  // namespace sfw
