#include "sfw/eikonal.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "sfw/error.hpp"
#include "sfw/quadrature.hpp"
#include "sfw/recovery.hpp"

namespace sfw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double chord_length(const SpaceFormModel& model, const Vec2& a, const Vec2& b) {
  const auto& rule = segment_rule();
  double sum = 0.0;
  for (std::size_t q = 0; q < 3; ++q)
    sum += rule.weights[q] * model.factor(Vec((1.0 - rule.nodes[q]) * a + rule.nodes[q] * b));
  return (b - a).norm() * sum;
}

/// Triangle update of c from a and b. The arrival time is interpolated in
/// factored form T = lambda(0) |x| tau with tau linear along ab, which keeps
/// the interpolation smooth near the point source; the foot point is found
/// by golden-section search for the straight chord with slowness F.
struct SegmentUpdate {
  double t;
  double interpolated;
};

SegmentUpdate segment_update(const Vec2& a, const Vec2& b, const Vec2& c, double ta, double tb,
                             double lambda0, double F) {
  const double tau_a = ta / (lambda0 * a.norm());
  const double tau_b = tb / (lambda0 * b.norm());
  auto interp = [&](double t) {
    return lambda0 * ((1.0 - t) * a + t * b).norm() * ((1.0 - t) * tau_a + t * tau_b);
  };
  auto cost = [&](double t) { return interp(t) + F * (c - (1.0 - t) * a - t * b).norm(); };
  constexpr double kRatio = 0.6180339887498949;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - kRatio * (hi - lo), x2 = lo + kRatio * (hi - lo);
  double f1 = cost(x1), f2 = cost(x2);
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kRatio * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kRatio * (hi - lo);
      f2 = cost(x2);
    }
  }
  double best = 0.5 * (lo + hi);
  if (cost(0.0) <= cost(best)) best = 0.0;
  if (cost(1.0) < cost(best)) best = 1.0;
  return {best, interp(best)};
}

}  // namespace

std::vector<char> suspect_cells(const DomainMesh& mesh, const std::vector<int>& suspects) {
  std::vector<char> flag(mesh.vertex_count(), 0);
  for (int v : suspects) flag[static_cast<std::size_t>(v)] = 1;
  std::vector<char> out(mesh.cell_count(), 0);
  for (std::size_t c = 0; c < mesh.cell_count(); ++c)
    for (int v : mesh.cells()[c])
      if (flag[static_cast<std::size_t>(v)]) out[c] = 1;
  return out;
}

EikonalResult eikonal_distance(const DomainMesh& mesh, const SpaceFormModel& model) {
  const auto& X = mesh.vertices();
  const std::size_t nv = X.size();
  int origin = -1;
  for (std::size_t v = 0; v < nv; ++v)
    if (X[v].norm() <= 1e-14) origin = static_cast<int>(v);
  if (origin < 0) fail(ErrorKind::domain, "the chart origin is not a vertex of the mesh");

  std::vector<std::vector<int>> vertex_cells(nv);
  for (std::size_t c = 0; c < mesh.cell_count(); ++c)
    for (int v : mesh.cells()[c]) vertex_cells[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));

  std::vector<double> T(nv, kInf);
  std::vector<char> known(nv, 0);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  auto offer = [&](int v, double t) {
    const auto i = static_cast<std::size_t>(v);
    if (t < T[i]) {
      T[i] = t;
      heap.emplace(t, v);
    }
  };

  const double lambda0 = model.factor(Vec(Vec2::Zero()));
  T[static_cast<std::size_t>(origin)] = 0.0;
  heap.emplace(0.0, origin);
  int accepted = 0;
  while (!heap.empty()) {
    const auto [t, v] = heap.top();
    heap.pop();
    const auto vi = static_cast<std::size_t>(v);
    if (known[vi] || t > T[vi]) continue;
    known[vi] = 1;
    ++accepted;
    for (int c : vertex_cells[vi]) {
      const Cell& cell = mesh.cells()[static_cast<std::size_t>(c)];
      for (int w : cell) {
        const auto wi = static_cast<std::size_t>(w);
        if (w == v || known[wi]) continue;
        offer(w, T[vi] + chord_length(model, X[vi], X[wi]));
        int other = -1;
        for (int o : cell)
          if (o != v && o != w) other = o;
        const auto oi = static_cast<std::size_t>(other);
        if (!known[oi] || v == origin || other == origin) continue;
        // Slowness along the chord to the foot point: one fixed-point pass.
        double F = model.factor(Vec((X[vi] + X[oi] + X[wi]) / 3.0));
        SegmentUpdate su = segment_update(X[vi], X[oi], X[wi], T[vi], T[oi], lambda0, F);
        Vec2 foot = (1.0 - su.t) * X[vi] + su.t * X[oi];
        const double flat = (X[wi] - foot).norm();
        if (flat > 0.0) {
          F = chord_length(model, foot, X[wi]) / flat;
          su = segment_update(X[vi], X[oi], X[wi], T[vi], T[oi], lambda0, F);
          foot = (1.0 - su.t) * X[vi] + su.t * X[oi];
        }
        offer(w, su.interpolated + chord_length(model, foot, X[wi]));
      }
    }
  }
  if (accepted != static_cast<int>(nv))
    fail(ErrorKind::geometry, "fast marching did not reach every vertex");

  EikonalResult res{ScalarField(mesh, T, FieldTag::custom), 0.0, 0.0, {}, 0.0, 0.0, accepted};

  const std::vector<VertexDerivatives> d = recover_derivatives(res.distance);
  std::vector<char> near(nv, 0);
  near[static_cast<std::size_t>(origin)] = 1;
  for (int ring = 0; ring < 2; ++ring) {
    std::vector<char> next = near;
    for (std::size_t v = 0; v < nv; ++v)
      if (near[v])
        for (int w : mesh.neighbors(static_cast<int>(v))) next[static_cast<std::size_t>(w)] = 1;
    near.swap(next);
  }
  const double exclusion = 0.2 * mesh.spec().profile.min_radius();
  res.exclusion_radius = exclusion;
  double sum = 0.0;
  int count = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (near[v] || X[v].norm() < exclusion) continue;
    const Jet phi = model.log_factor(Vec(X[v]));
    const double lam = std::exp(phi.value);
    const double defect = std::abs(d[v].grad.norm() / lam - 1.0);
    res.max_gradient_defect = std::max(res.max_gradient_defect, defect);
    sum += defect;
    ++count;
    const Mat2 hr = conformal_covariant_hessian(phi.grad, Vec(d[v].grad), Mat(d[v].hess));
    const double norm_g = hr.norm() / (lam * lam);
    if (norm_g > 4.0 * (1.0 + 1.0 / T[v])) res.cut_suspects.push_back(static_cast<int>(v));
  }
  res.mean_gradient_defect = count > 0 ? sum / count : 0.0;
  const std::vector<char> flagged = suspect_cells(mesh, res.cut_suspects);
  for (std::size_t c = 0; c < flagged.size(); ++c)
    if (flagged[c]) res.suspect_measure += mesh.metric_area(static_cast<int>(c));
  return res;
}

}  // namespace sfw
