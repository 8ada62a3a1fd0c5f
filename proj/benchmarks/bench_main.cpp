#include <benchmark/benchmark.h>

#include <random>

#include "simpcalc/constructions.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/mayer_vietoris.hpp"
#include "simpcalc/quasicat.hpp"
#include "simpcalc/simplicial_chains.hpp"
#include "simpcalc/smith.hpp"
#include "simpcalc/tower.hpp"

using namespace simpcalc;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dist(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_HomologyOfIteratedSuspension(benchmark::State& state) {
  SuspensionCache cache;
  const FiniteSSet x = cache.iterate(boundary(2).with_basepoint(0), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const ChainComplex c = reduced_normalized_chains(x);
    benchmark::DoNotOptimize(homology_groups(c, 0, c.high()));
  }
}
BENCHMARK(BM_HomologyOfIteratedSuspension)->DenseRange(1, 3);

static void BM_ProductOfSimplices(benchmark::State& state) {
  const FiniteSSet a = standard_simplex(static_cast<int>(state.range(0)));
  const FiniteSSet b = standard_simplex(2);
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b).space().size());
}
BENCHMARK(BM_ProductOfSimplices)->DenseRange(1, 3);

static void BM_QuasicategoryCheck(benchmark::State& state) {
  const FiniteSSet x = standard_simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_quasicategory_up_to(x, 3).passed);
}
BENCHMARK(BM_QuasicategoryCheck)->DenseRange(2, 4);

static void BM_MayerVietoris(benchmark::State& state) {
  const CoverData cd = two_arc_cover();
  for (auto _ : state) benchmark::DoNotOptimize(mayer_vietoris(cd, 2).exact());
}
BENCHMARK(BM_MayerVietoris);

static void BM_ChainsTower(benchmark::State& state) {
  const FiniteSSet x = boundary(2).with_basepoint(0);
  const StageEvaluator f = reduced_chains_evaluator();
  for (auto _ : state) benchmark::DoNotOptimize(tower_report(f, x, static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_ChainsTower)->DenseRange(1, 3);
BENCHMARK_MAIN();
