#include <benchmark/benchmark.h>

#include <cmath>

#include "sfw/boundary.hpp"
#include "sfw/eikonal.hpp"
#include "sfw/elliptic.hpp"
#include "sfw/laplace_beltrami.hpp"
#include "sfw/recovery.hpp"
#include "sfw/reilly_identity.hpp"

namespace {

sfw::DomainMesh perturbed_mesh(const sfw::SpaceFormModel& model, int level) {
  sfw::StarDomainSpec s;
  s.profile = sfw::RadialProfile::fourier(0.34, {0.0, 0.05});
  s.level = level;
  return sfw::build_mesh(s, model);
}

void BM_BuildMesh(benchmark::State& state) {
  const auto model = sfw::SpaceFormModel::hyperbolic(2);
  for (auto _ : state) benchmark::DoNotOptimize(perturbed_mesh(model, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildMesh)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& state) {
  const auto model = sfw::SpaceFormModel::hyperbolic(2);
  const auto mesh = perturbed_mesh(model, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sfw::assemble_laplace_beltrami(mesh, model, 2.0));
  state.counters["cells"] = static_cast<double>(mesh.cell_count());
}
BENCHMARK(BM_Assemble)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const auto model = sfw::SpaceFormModel::hyperbolic(2);
  const auto mesh = perturbed_mesh(model, static_cast<int>(state.range(0)));
  int iterations = 0;
  for (auto _ : state) {
    const auto r = sfw::solve_dirichlet(sfw::DirichletProblem::weighted_heintze_karcher(mesh, 1.0));
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.solution.values().data());
  }
  state.counters["cg_iterations"] = iterations;
}
BENCHMARK(BM_Solve)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Recovery(benchmark::State& state) {
  const auto model = sfw::SpaceFormModel::hyperbolic(2);
  const auto mesh = perturbed_mesh(model, static_cast<int>(state.range(0)));
  const auto f = sfw::ScalarField::sample(mesh, [](const sfw::Vec2& x) { return std::sin(x.x()) + x.y() * x.y(); });
  for (auto _ : state) benchmark::DoNotOptimize(sfw::recovered_hessian(f, model));
}
BENCHMARK(BM_Recovery)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ReillyResidual(benchmark::State& state) {
  const auto model = sfw::SpaceFormModel::hyperbolic(2);
  const auto mesh = perturbed_mesh(model, static_cast<int>(state.range(0)));
  const auto f = sfw::solve_dirichlet(sfw::DirichletProblem::weighted_heintze_karcher(mesh, 1.0)).solution;
  for (auto _ : state) benchmark::DoNotOptimize(sfw::reilly_residual(mesh, model, f, sfw::SpaceFormPotential{}, -1.0));
}
BENCHMARK(BM_ReillyResidual)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FastMarching(benchmark::State& state) {
  const auto model = sfw::SpaceFormModel::custom(2, sfw::Expression::parse("0.1*(x1^2 - x2^2)", 2));
  const auto mesh = perturbed_mesh(model, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sfw::eikonal_distance(mesh, model).accepted);
}
BENCHMARK(BM_FastMarching)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
