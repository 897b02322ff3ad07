#include <benchmark/benchmark.h>

#include "mattis/correlators.hpp"
#include "mattis/model.hpp"
#include "mattis/thermo.hpp"

using namespace mattis;

namespace {

ModelParams params(std::int64_t N) {
  ModelParams p;
  p.gamma1 = 0.4;
  p.gamma2 = 0.3;
  p.l_over_a = N;
  return p;
}

Exec exec_of(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void BM_ground_state_energy(benchmark::State& st) {
  ModelParams p = params(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ground_state_energy(p, exec_of(st)));
}

void BM_boson_free_energy(benchmark::State& st) {
  ModelParams p = params(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(boson_free_energy(p, 5.0, exec_of(st)));
}

void BM_ln_G(benchmark::State& st) {
  ModelParams p = params(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ln_G(p, inf, {1, 1}, {1, 1}, 3.0, 0.0, 0.5, 1e-3, exec_of(st)));
}

void BM_ln_G_thermal(benchmark::State& st) {
  ModelParams p = params(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ln_G(p, 5.0, {1, 1}, {-1, 1}, 3.0, 0.0, 0.5, 1e-3, exec_of(st)));
}

void BM_density_two_point(benchmark::State& st) {
  ModelParams p = params(st.range(0));
  DensityInsertion a{1, 1, 2.0, 0, 0.3}, b{1, 1, 0, 0, 0.0};
  for (auto _ : st)
    benchmark::DoNotOptimize(density_two_point(p, inf, a, b, 1e-3, CorrelatorMode::finite_L, exec_of(st)));
}

// second argument: 0 = serial reference, 1 = OpenMP
#define MATTIS_GRID(bm) BENCHMARK(bm)->ArgsProduct({{101, 401}, {0, 1}})->Unit(benchmark::kMillisecond)

MATTIS_GRID(BM_ground_state_energy);
MATTIS_GRID(BM_boson_free_energy);
MATTIS_GRID(BM_ln_G);
MATTIS_GRID(BM_ln_G_thermal);
MATTIS_GRID(BM_density_two_point);

}  // namespace

BENCHMARK_MAIN();
