#include <benchmark/benchmark.h>

#include "picard/catalog.hpp"
#include "picard/constructions.hpp"
#include "picard/equivalence.hpp"
#include "picard/representation.hpp"
#include "picard/search.hpp"

using namespace picard;

static void BM_FindEquivalenceBiproduct(benchmark::State& state) {
  auto d2 = catalog_module("d2@z6");
  auto d3 = catalog_module("d3@z6");
  auto d6 = catalog_module("d6@z6");
  auto sum = biproduct(d2, d3).sum;
  for (auto _ : state) benchmark::DoNotOptimize(find_equivalence(sum, d6, SearchBudget{}));
}
BENCHMARK(BM_FindEquivalenceBiproduct);

static void BM_HomEnumerationB2(benchmark::State& state) {
  auto b2 = catalog_module("b2@z2");
  for (auto _ : state) benchmark::DoNotOptimize(hom_two_group(b2, b2, SearchBudget{}));
}
BENCHMARK(BM_HomEnumerationB2);

static void BM_EndRingD3(benchmark::State& state) {
  SymTwoGroup d3 = catalog_twogroup("d3");
  for (auto _ : state) benchmark::DoNotOptimize(end_ring(d3, SearchBudget{}).objects.size());
}
BENCHMARK(BM_EndRingD3);

static void BM_PuppeMod2(benchmark::State& state) {
  RModHom f = catalog_hom("mod2@z4");
  for (auto _ : state) benchmark::DoNotOptimize(puppe_check(f, SearchBudget{}).all_pass());
}
BENCHMARK(BM_PuppeMod2);

BENCHMARK_MAIN();
