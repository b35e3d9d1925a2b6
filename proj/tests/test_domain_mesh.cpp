#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sfw/domain_mesh.hpp"
#include "sfw/error.hpp"
#include "sfw/mesh_io.hpp"
#include "sfw/quadrature.hpp"
#include "support.hpp"

using namespace sfw;
using namespace sfw::testing;

namespace {

double mesh_area(const DomainMesh& m) {
  double a = 0.0;
  for (std::size_t c = 0; c < m.cell_count(); ++c) a += m.metric_area(static_cast<int>(c));
  return a;
}

double boundary_length(const DomainMesh& m) {
  const QuadratureScheme q = QuadratureScheme::build(m, m.model());
  double s = 0.0;
  for (double w : q.boundary_weights()) s += w;
  return s;
}

void check_structure(const DomainMesh& m) {
  for (std::size_t c = 0; c < m.cell_count(); ++c) {
    CHECK(m.flat_area(static_cast<int>(c)) > 0.0);
    CHECK(m.metric_area(static_cast<int>(c)) > 0.0);
  }
  // Each boundary facet is owned by exactly one cell and points outward.
  const auto& facets = m.boundary_facets();
  REQUIRE(facets.size() == m.boundary_vertices().size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto [a, b] = facets[i];
    int owners = 0;
    for (const Cell& c : m.cells()) {
      const std::set<int> s(c.begin(), c.end());
      owners += s.count(a) && s.count(b);
    }
    CHECK(owners == 1);
    const Cell& c = m.cells()[static_cast<std::size_t>(m.facet_cells()[i])];
    const Vec2 pa = m.vertices()[static_cast<std::size_t>(a)], pb = m.vertices()[static_cast<std::size_t>(b)];
    const Vec2 centroid = (m.vertices()[static_cast<std::size_t>(c[0])] + m.vertices()[static_cast<std::size_t>(c[1])] +
                           m.vertices()[static_cast<std::size_t>(c[2])]) / 3.0;
    const Vec2 t = pb - pa;
    const Vec2 n(t.y(), -t.x());
    CHECK(n.dot(0.5 * (pa + pb) - centroid) > 0.0);
    // Closed chain: facet i ends where facet i + 1 starts.
    CHECK(facets[(i + 1) % facets.size()][0] == b);
  }
}

}  // namespace

TEST_CASE("euclidean disk at level 0") {
  const DomainMesh m = disk(SpaceFormModel::euclidean(2), 0.5, 0);
  check_structure(m);
  for (int v : m.boundary_vertices())
    CHECK(m.vertices()[static_cast<std::size_t>(v)].norm() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(m.vertices()[0].norm() == 0.0);
  CHECK(m.h_max() / m.h_min() <= 8.0);
}

TEST_CASE("perturbed hyperbolic mesh at level 2 has a quarter of the level-0 size") {
  const RadialProfile p = RadialProfile::fourier(0.5, {0.0, 0.1});
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const DomainMesh m0 = star(hyp, p, 0), m2 = star(hyp, p, 2);
  check_structure(m2);
  const double ratio = m2.h_max() / m0.h_max();
  CHECK(ratio >= 0.2);
  CHECK(ratio <= 0.3);
  for (std::size_t i = 0; i < m2.boundary_vertices().size(); ++i) {
    const double t = m2.boundary_params()[i];
    const Vec2 x = m2.vertices()[static_cast<std::size_t>(m2.boundary_vertices()[i])];
    CHECK(x.norm() == doctest::Approx(0.5 + 0.1 * std::cos(2 * t)).epsilon(1e-13));
  }
  CHECK(m2.h_max() / m2.h_min() <= 8.0);
}

TEST_CASE("profiles outside the chart or degenerate profiles are rejected") {
  try {
    (void)disk(SpaceFormModel::hyperbolic(2), 1.2, 0);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
  try {
    (void)star(SpaceFormModel::euclidean(2), RadialProfile::fourier(0.2, {0.3}), 0);
    FAIL("expected a spec error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::spec);
  }
  CHECK_THROWS_AS((void)disk(SpaceFormModel::spherical(2), 1.0, 0), Error);
}

TEST_CASE("regular refinement bookkeeping") {
  const DomainMesh m0 = disk(SpaceFormModel::euclidean(2), 1.0, 0);
  const DomainMesh m1 = refine(m0);
  CHECK(m1.cell_count() == 4 * m0.cell_count());
  CHECK(m1.boundary_vertices().size() == 2 * m0.boundary_vertices().size());
  CHECK(m1.level() == 1);
  const double ratio = m1.h_max() / m0.h_max();
  CHECK(ratio >= 0.45);
  CHECK(ratio <= 0.55);
  for (int v : m1.boundary_vertices())
    CHECK(m1.vertices()[static_cast<std::size_t>(v)].norm() == doctest::Approx(1.0).epsilon(1e-14));
  // refine() and build_mesh at the next level agree.
  const DomainMesh b1 = disk(SpaceFormModel::euclidean(2), 1.0, 1);
  CHECK(b1.vertices() == m1.vertices());
  CHECK(b1.cells() == m1.cells());
}

TEST_CASE("metric mesh size halves under refinement in curved charts") {
  // The coarse base lattice under-resolves the growth of the conformal
  // factor toward the boundary; halving is checked from level 1 on.
  const RadialProfile p = RadialProfile::fourier(0.5, {0.0, 0.1});
  for (const SpaceFormModel& model : {SpaceFormModel::hyperbolic(2), SpaceFormModel::spherical(2)}) {
    DomainMesh m = star(model, p, 1);
    for (int l = 1; l < 4; ++l) {
      const DomainMesh r = refine(m);
      const double ratio = r.h_max() / m.h_max();
      CHECK(ratio >= 0.45);
      CHECK(ratio <= 0.55);
      m = r;
    }
  }
}

TEST_CASE("refined hyperbolic disk area is stable") {
  const SpaceFormModel hyp = SpaceFormModel::hyperbolic(2);
  const double r = chart_radius_of_geodesic_ball(hyp, 0.7);
  const DomainMesh m2 = disk(hyp, r, 2);
  const DomainMesh m3 = refine(m2);
  CHECK(std::abs(mesh_area(m3) / mesh_area(m2) - 1.0) < 5e-3);
}

TEST_CASE("geodesic ball volumes and boundary lengths converge at second order") {
  struct Case {
    SpaceFormModel model;
    double R, area, length;
  };
  const double R = 0.7;
  const Case cases[] = {
      {SpaceFormModel::euclidean(2), R, pi * R * R, 2 * pi * R},
      {SpaceFormModel::hyperbolic(2), R, 2 * pi * (std::cosh(R) - 1), 2 * pi * std::sinh(R)},
      {SpaceFormModel::spherical(2), R, 2 * pi * (1 - std::cos(R)), 2 * pi * std::sin(R)},
  };
  for (const Case& c : cases) {
    const double rc = chart_radius_of_geodesic_ball(c.model, c.R);
    std::vector<double> h, ea, el;
    for (int l = 1; l <= 3; ++l) {
      const DomainMesh m = disk(c.model, rc, l);
      h.push_back(m.h_max());
      ea.push_back(std::abs(mesh_area(m) - c.area));
      el.push_back(std::abs(boundary_length(m) - c.length));
    }
    CHECK(order(ea[0], ea[2], h[0], h[2]) >= 2.0 - 0.1);
    // Boundary quadrature is spectrally accurate on circles.
    CHECK((el[2] < 1e-12 || order(el[0], el[2], h[0], h[2]) >= 2.0));
  }
}

TEST_CASE("chart radius of geodesic balls") {
  CHECK(chart_radius_of_geodesic_ball(SpaceFormModel::hyperbolic(2), 0.7) == doctest::Approx(std::tanh(0.35)));
  CHECK(chart_radius_of_geodesic_ball(SpaceFormModel::spherical(2), 0.5) == doctest::Approx(std::tan(0.25)));
  CHECK(chart_radius_of_geodesic_ball(SpaceFormModel::euclidean(2), 0.5) == doctest::Approx(0.5));
}

TEST_CASE("flat outward normals of a closed boundary sum to zero") {
  for (const RadialProfile& p : {RadialProfile::circle(0.6), RadialProfile::ellipse(0.9, 0.5),
                                 RadialProfile::fourier(0.5, {0.0, 0.05, 0.08}, {0.03})}) {
    const DomainMesh m = star(SpaceFormModel::hyperbolic(2), p, 2);
    Vec2 sum = Vec2::Zero();
    for (const Facet& f : m.boundary_facets()) {
      const Vec2 t = m.vertices()[static_cast<std::size_t>(f[1])] - m.vertices()[static_cast<std::size_t>(f[0])];
      sum += Vec2(t.y(), -t.x());
    }
    CHECK(sum.norm() < 1e-10);
    check_structure(m);
  }
}

TEST_CASE("ellipse profile") {
  const RadialProfile e = RadialProfile::ellipse(1.0, 0.8);
  CHECK(e(0.0) == doctest::Approx(1.0));
  CHECK(e(pi / 2) == doctest::Approx(0.8));
  const Vec2 p = e.point(0.7);
  CHECK(p.x() * p.x() + p.y() * p.y() / 0.64 == doctest::Approx(1.0));
  CHECK(e.min_radius() == doctest::Approx(0.8));
  CHECK(e.max_radius() == doctest::Approx(1.0));
}

TEST_CASE("neighbour lists are sorted and symmetric") {
  const DomainMesh m = disk(SpaceFormModel::spherical(2), 0.4, 1);
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const auto nb = m.neighbors(static_cast<int>(v));
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (int w : nb) {
      const auto back = m.neighbors(w);
      CHECK(std::binary_search(back.begin(), back.end(), static_cast<int>(v)));
    }
  }
}

TEST_CASE("mesh dumps round-trip") {
  const DomainMesh m = star(SpaceFormModel::hyperbolic(2), RadialProfile::fourier(0.5, {0.0, 0.1}), 1);
  std::stringstream ss;
  write_mesh(ss, m);
  const MeshTables t = read_mesh(ss);
  CHECK(t.vertices == m.vertices());
  CHECK(t.cells == m.cells());
  CHECK(t.boundary_facets == m.boundary_facets());
  REQUIRE(t.boundary_params.size() == m.boundary_params().size());
  for (std::size_t i = 0; i < t.boundary_params.size(); ++i) {
    CHECK(t.boundary_params[i].first == m.boundary_vertices()[i]);
    CHECK(t.boundary_params[i].second == m.boundary_params()[i]);
  }
}

TEST_CASE("malformed mesh dumps name the line") {
  std::stringstream ss("# sfw-mesh v1\nvertices 2\n0 0\n0.5 oops\n");
  try {
    (void)read_mesh(ss);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find("line 4:") != std::string::npos);
  }
  std::stringstream bad_header("sfw-mesh v2\n");
  CHECK_THROWS_AS((void)read_mesh(bad_header), Error);
}

TEST_CASE("mesh generation is deterministic") {
  const RadialProfile p = RadialProfile::fourier(0.45, {0.02, 0.05});
  const DomainMesh a = star(SpaceFormModel::spherical(2), p, 3), b = star(SpaceFormModel::spherical(2), p, 3);
  CHECK(a.vertices() == b.vertices());
  CHECK(a.cells() == b.cells());
  CHECK(a.h_max() == b.h_max());
}
