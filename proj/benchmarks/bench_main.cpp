#include <benchmark/benchmark.h>

#include "support.hpp"

using namespace macdual;
using namespace macdual::testing;

static void BM_BuchbergerCyclic3(benchmark::State& state) {
  const auto ring = small_ring(3);
  const auto gens = polys(ring, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger_basis(ring, gens, std::nullopt));
  }
}
BENCHMARK(BM_BuchbergerCyclic3);

static void BM_BuchbergerCurve(benchmark::State& state) {
  const auto ring = curve_ring();
  const auto gens = curve_ideal(ring).generators();
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger_basis(ring, gens, std::nullopt));
  }
}
BENCHMARK(BM_BuchbergerCurve);

// I_m of the curve, m = range(0)
static void BM_PerpCurve(benchmark::State& state) {
  const auto ring = curve_ring();
  const auto im = artinian_reduction(curve_ideal(ring), {static_cast<unsigned>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(perp_ideal(im));
  }
}
BENCHMARK(BM_PerpCurve)->Arg(1)->Arg(4)->Arg(7);

static void BM_AnnihilatorCurve(benchmark::State& state) {
  const auto ring = curve_ring();
  const auto im = artinian_reduction(curve_ideal(ring), {static_cast<unsigned>(state.range(0))});
  const auto w = perp_ideal(im);
  for (auto _ : state) {
    benchmark::DoNotOptimize(perp_module(w));
  }
}
BENCHMARK(BM_AnnihilatorCurve)->Arg(1)->Arg(4)->Arg(7);

static void BM_LimitCurve(benchmark::State& state) {
  const auto ring = curve_ring();
  const auto i = curve_ideal(ring);
  const auto bound = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const auto tower = dual_tower(i, bound);
    benchmark::DoNotOptimize(section_lift(ring, tower, bound));
  }
}
BENCHMARK(BM_LimitCurve)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ReconstructCurve(benchmark::State& state) {
  const auto ring = curve_ring();
  const auto h = section_lift(ring, dual_tower(curve_ideal(ring), 7), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(h));
  }
}
BENCHMARK(BM_ReconstructCurve)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
