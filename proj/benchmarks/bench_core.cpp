#include <benchmark/benchmark.h>

#include "thue/bounds.hpp"
#include "thue/embeddings.hpp"
#include "thue/provider.hpp"
#include "thue/stender.hpp"

using namespace thue;

static void BM_ElementMultiply(benchmark::State& state) {
  const FieldPtr K = NumberField::make({1, 1, 1, 1, 1, 1, 1});
  const AlgElement a(K, {3, -1, 4, 1, -5, 9}), b(K, {mpq_class(2, 7), 6, -5, 3, 5, mpq_class(-8, 9)});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ElementMultiply);

static void BM_RootIsolation(benchmark::State& state) {
  const FieldPtr K = stender::base_polynomial({static_cast<long>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(compute_embeddings(K, 256));
}
BENCHMARK(BM_RootIsolation)->Arg(2)->Arg(50);

static void BM_StenderRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stender::coeffs_by_recurrence({2, 1}, state.range(0)));
}
BENCHMARK(BM_StenderRecurrence)->Arg(15)->Arg(200);

static void BM_StenderSolve(benchmark::State& state) {
  MatveevTypeProvider provider;
  for (auto _ : state) benchmark::DoNotOptimize(stender::solve_family({2, 1}, 200, {state.range(0), 6, false}, &provider));
}
BENCHMARK(BM_StenderSolve)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ComposeBounds(benchmark::State& state) {
  const UnitBasis B = stender::unit_basis({2, 1});
  const AlgElement alpha = AlgElement::generator(B.field);
  MatveevTypeProvider provider;
  for (auto _ : state) benchmark::DoNotOptimize(compose_bounds(B, alpha, 100, &provider));
}
BENCHMARK(BM_ComposeBounds)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
