#include <benchmark/benchmark.h>

#include "picard/catalog.hpp"
#include "picard/rmodule.hpp"
#include "picard/tworing.hpp"

using namespace picard;

static void BM_ValidateTwoRingZ6(benchmark::State& state) {
  TwoRing r = *catalog_ring("z6");
  for (auto _ : state) benchmark::DoNotOptimize(validate_two_ring(r).all_pass());
}
BENCHMARK(BM_ValidateTwoRingZ6);

static void BM_ValidateModuleB4(benchmark::State& state) {
  RModule m = *catalog_module("b4@z4");
  for (auto _ : state) benchmark::DoNotOptimize(validate_module(m).all_pass());
}
BENCHMARK(BM_ValidateModuleB4);

static void BM_ValidateModuleD6(benchmark::State& state) {
  RModule m = *catalog_module("d6@z6");
  for (auto _ : state) benchmark::DoNotOptimize(validate_module(m).all_pass());
}
BENCHMARK(BM_ValidateModuleD6);
