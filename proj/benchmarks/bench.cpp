#include <benchmark/benchmark.h>

#include "dyson/gbe.hpp"
#include "dyson/processes.hpp"
#include "dyson/sde.hpp"

using namespace dyson;

namespace {

Matrix seeded_hermitian(int n, std::uint64_t seed) {
  NoiseStream st(seed);
  return sample_gue(n, 1.0, st);
}

void BM_eigh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = seeded_hermitian(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigh(m));
  }
}
BENCHMARK(BM_eigh)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_projected_matrix_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NoiseStream st(2);
  const ProjectedMatrixModel model(2.0, 1e-8);
  auto s = ProjectedMatrixModel::make_state(
      default_initial_spectrum(n).cast<Complex>().asDiagonal());
  for (auto _ : state) {
    auto next = model.step(s, 1e-4, st);
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_projected_matrix_step)->Arg(4)->Arg(8)->Arg(16);

void BM_eigen_sde_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NoiseStream st(3);
  const DysonEigenModel model(2.0, 1e-8);
  RealVector lam = default_initial_spectrum(n);
  for (auto _ : state) {
    auto next = model.step(lam, 1e-6, st);
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_eigen_sde_step)->Arg(4)->Arg(16)->Arg(64);

void BM_tridiag_eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NoiseStream st(4);
  const auto t = sample_gbe(n, 2.0, st);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridiag_eigenvalues(t));
  }
}
BENCHMARK(BM_tridiag_eigenvalues)->Arg(16)->Arg(64)->Arg(256);

void BM_ensemble_workers(benchmark::State& state) {
  SimConfig cfg;
  cfg.n = 4;
  cfg.beta = 2.0;
  cfg.t_end = 0.01;
  cfg.dt = 1e-4;
  cfg.seed = 5;
  cfg.record_every = cfg.steps();
  const ProjectedMatrixModel model(cfg.beta, cfg.delta_gap);
  const auto s0 = ProjectedMatrixModel::make_state(
      default_initial_spectrum(4).cast<Complex>().asDiagonal());
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ensemble(model, cfg, s0, 32, workers));
  }
}
BENCHMARK(BM_ensemble_workers)->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
