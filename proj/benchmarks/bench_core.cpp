#include <benchmark/benchmark.h>

#include "rsm/hankel.hpp"
#include "rsm/hasimoto.hpp"
#include "rsm/nls.hpp"
#include "rsm/operators.hpp"
#include "rsm/profiles.hpp"
#include "rsm/smap.hpp"

using namespace rsm;

static void BM_NonlocalI(benchmark::State& state) {
  auto g = make_grid(static_cast<int>(state.range(0)), 16.0);
  RealRadialField f = abs2(gauss_m1(g, 0.5));
  for (auto _ : state) {
    auto I = nonlocal_I(f);
    benchmark::DoNotOptimize(I.v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NonlocalI)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_LaplacianM1(benchmark::State& state) {
  auto g = make_grid(static_cast<int>(state.range(0)), 16.0);
  ComplexRadialField q = gauss_m1(g, 0.5);
  for (auto _ : state) {
    auto L = laplacian_m1(q);
    benchmark::DoNotOptimize(L.v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LaplacianM1)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_StrangStep(benchmark::State& state) {
  auto g = make_grid(static_cast<int>(state.range(0)), 16.0);
  NlsState s{0.0, gauss_m1(g, 0.2)};
  const NlsParams p = make_nls_params(1.0, 1);
  for (auto _ : state) {
    s = step_strang(s, p, 1e-3);
    benchmark::DoNotOptimize(s.q.v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StrangStep)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_SmapStep(benchmark::State& state) {
  auto g = make_grid(static_cast<int>(state.range(0)), 16.0);
  SmapState s{0.0, meridian_map(g, meridian_profile(g, 0.3))};
  const double dt = smap_dt_bound(*g) / 2;
  for (auto _ : state) {
    s = step_rk4_project(s, dt);
    benchmark::DoNotOptimize(s.u.v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmapStep)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

static void BM_BuildFrame(benchmark::State& state) {
  auto g = make_grid(static_cast<int>(state.range(0)), 16.0);
  SphereMapField u = meridian_map(g, meridian_profile(g, 0.3));
  for (auto _ : state) {
    auto fr = build_frame(u);
    benchmark::DoNotOptimize(fr.e.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildFrame)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

static void BM_Hankel1Build(benchmark::State& state) {
  auto g = make_grid(static_cast<int>(state.range(0)), 16.0);
  for (auto _ : state) {
    Hankel1 T(g, 16.0);
    benchmark::DoNotOptimize(T.frequencies().data());
  }
}
BENCHMARK(BM_Hankel1Build)->RangeMultiplier(2)->Range(256, 1024);

static void BM_Hankel1FreeEvolution(benchmark::State& state) {
  auto g = make_grid(static_cast<int>(state.range(0)), 16.0);
  Hankel1 T(g, 16.0);
  ComplexRadialField q = gauss_m1(g, 0.5);
  for (auto _ : state) {
    auto qt = T.free_evolution(q, 0.5);
    benchmark::DoNotOptimize(qt.v.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hankel1FreeEvolution)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

BENCHMARK_MAIN();
