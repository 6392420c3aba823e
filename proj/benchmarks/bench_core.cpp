#include <benchmark/benchmark.h>

#include <random>

#include "augopt/datagen.hpp"
#include "augopt/decision_set.hpp"
#include "augopt/optimizers.hpp"
#include "augopt/smoothing.hpp"
#include "augopt/soft_min.hpp"
#include "augopt/sum_norms.hpp"

namespace {

using namespace augopt;

SymMatrix random_symmetric(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, normal(rng));
  }
  return m;
}

void BM_MinEigenvalue(benchmark::State& state) {
  const SymMatrix m = random_symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(m));
}
BENCHMARK(BM_MinEigenvalue)->Arg(8)->Arg(32)->Arg(64)->Arg(128)->Arg(400);

void BM_ProjectSimplex(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec q(static_cast<std::size_t>(state.range(0)));
  for (double& x : q) x = normal(rng);
  for (auto _ : state) benchmark::DoNotOptimize(project_simplex(q));
}
BENCHMARK(BM_ProjectSimplex)->Arg(4)->Arg(64)->Arg(1024);

void BM_IntersectionProjection(benchmark::State& state) {
  const auto k = DecisionSet::box({0.0, 0.0}, {40.0, 40.0}).intersect_ball({38.0, 38.0}, 5.0);
  const Vec w{45.0, 30.0};
  for (auto _ : state) benchmark::DoNotOptimize(k.project(w));
}
BENCHMARK(BM_IntersectionProjection);

void BM_SoftMinGradient(benchmark::State& state) {
  const Dataset d = gen_clusters(default_gen_spec(1));
  SoftMinParams p{d.X, d.centroids, 0.005, Divergence::kSquaredEuclidean};
  const ObjectiveHandle f = soft_min_objective(p);
  const Vec q{0.25, 0.25, 0.25, 0.25};
  for (auto _ : state) benchmark::DoNotOptimize(f.grad(q));
}
BENCHMARK(BM_SoftMinGradient);

void BM_SumNormsGradient(benchmark::State& state) {
  GenSpec spec = default_gen_spec(1);
  spec.n_per_cluster = static_cast<std::size_t>(state.range(0));
  const Dataset d = gen_clusters(spec);
  SumNormsParams p{d.X, 1.0, uniform_pair_weights(d.size(), 1.0 / static_cast<double>(d.size()))};
  Vec w;
  for (const auto& x : d.X) w.insert(w.end(), x.begin(), x.end());
  for (auto _ : state) benchmark::DoNotOptimize(grad_sum_norms(p, w));
}
BENCHMARK(BM_SumNormsGradient)->Arg(10)->Arg(50)->Arg(100);

void BM_GradOp(benchmark::State& state) {
  const auto f = perturbed_quadratic_objective({{20.0, 20.0}, 1.0, 1.0, 0.6});
  const SmoothingParams p{2.0, static_cast<std::size_t>(state.range(0)), 7};
  const Vec w{15.0, 24.0};
  for (auto _ : state) benchmark::DoNotOptimize(grad_op(f, w, p));
}
BENCHMARK(BM_GradOp)->Arg(16)->Arg(64)->Arg(256);

void BM_GraduatedDescent(benchmark::State& state) {
  const auto f = perturbed_quadratic_objective({{20.0, 20.0}, 1.0, 1.0, 0.6});
  const auto k = DecisionSet::box({0.0, 0.0}, {40.0, 40.0});
  GraduatedConfig cfg;
  cfg.phases = 8;
  cfg.eta = 0.3;
  cfg.mu_kappa = 0.64;
  cfg.seed = 3;
  TraceOptions opts;
  opts.store_iterates = false;
  for (auto _ : state) benchmark::DoNotOptimize(graduated_descent(f, k, cfg, opts).w_final);
}
BENCHMARK(BM_GraduatedDescent)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
