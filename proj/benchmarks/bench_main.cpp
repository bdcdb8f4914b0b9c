#include <benchmark/benchmark.h>

#include "superchar/superchar.hpp"

using namespace superchar;

static void BM_EnumerateBases(benchmark::State& state) {
  const auto d = build_root_datum(Family::gl, state.range(0), state.range(0));
  const Base start = default_base(d, BaseKind::distinguished);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bases(start));
}
BENCHMARK(BM_EnumerateBases)->Arg(2)->Arg(3)->Arg(4);

static void BM_IntegrabilityTest(benchmark::State& state) {
  const auto d = build_root_datum(Family::gl, 3, 2);
  const IntegrabilityTest test(default_base(d, BaseKind::mixed));
  const Weight l = d->weight({3, 1, 0}, {2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(test(l));
}
BENCHMARK(BM_IntegrabilityTest);

static void BM_EnumerateY(benchmark::State& state) {
  const auto d = build_root_datum(Family::gl, 2, 1);
  const Base b = default_base(d, BaseKind::mixed);
  const Weight l = d->weight({state.range(0), 0}, {0});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Y(b, l));
}
BENCHMARK(BM_EnumerateY)->Arg(2)->Arg(4)->Arg(8);

static void BM_ComputeB(benchmark::State& state) {
  const auto d = build_root_datum(Family::gl, 2, 2);
  const Base b = default_base(d, BaseKind::mixed);
  for (auto _ : state) benchmark::DoNotOptimize(compute_b(b, d->weight({1, 0}, {0, 0})));
}
BENCHMARK(BM_ComputeB);

static void BM_RingProduct(benchmark::State& state) {
  const auto d = build_root_datum(Family::gl, 2, 1);
  const auto b = compute_b(default_base(d, BaseKind::mixed), d->eps(0)).element;
  RingElement x = one(d);
  for (int k = 0; k < state.range(0); ++k) x *= b;
  for (auto _ : state) benchmark::DoNotOptimize(x * b);
}
BENCHMARK(BM_RingProduct)->Arg(2)->Arg(4)->Arg(6);

static void BM_Decompose(benchmark::State& state) {
  const auto d = build_root_datum(Family::gl, 2, 1);
  const Base base = default_base(d, BaseKind::mixed);
  const auto b = compute_b(base, d->eps(0)).element;
  const RingElement x = b * b * b;
  for (auto _ : state) {
    ShortBasisSolver solver(base);
    benchmark::DoNotOptimize(decompose(solver, x));
  }
}
BENCHMARK(BM_Decompose);

static void BM_InA(benchmark::State& state) {
  const auto d = build_root_datum(Family::gl, 2, 2);
  const auto b = compute_b(default_base(d, BaseKind::mixed), d->weight({1, 0}, {0, 0})).element;
  const RingElement x = b * b;
  for (auto _ : state) benchmark::DoNotOptimize(in_A(x));
}
BENCHMARK(BM_InA);

BENCHMARK_MAIN();
