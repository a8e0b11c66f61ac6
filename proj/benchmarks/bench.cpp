#include <benchmark/benchmark.h>

#include "coxshadow/lsmodel.hpp"
#include "coxshadow/shadows.hpp"

using namespace coxshadow;

static void BM_length(benchmark::State& state) {
  const RootDatum& d = RootDatum::get("A2~");
  AffineElement x = from_word(d, {1, 0, 2, 1, 0, 2, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(length(d, x));
}
BENCHMARK(BM_length);

static void BM_reduced_word(benchmark::State& state) {
  const RootDatum& d = RootDatum::get("C2~");
  AffineElement x = from_word(d, {1, 0, 2, 1, 0, 2, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(reduced_word(d, x));
}
BENCHMARK(BM_reduced_word);

static void BM_shadow_brute(benchmark::State& state) {
  const RootDatum& d = RootDatum::get("A2~");
  AffineElement x = from_word(d, {1, 0, 2, 1, 0, 2, 1, 0});
  Orientation o = Orientation::at_infinity(d.longest_element());
  for (auto _ : state) benchmark::DoNotOptimize(shadow_brute(d, x, o).elements.size());
}
BENCHMARK(BM_shadow_brute);

static void BM_shadow_recursive(benchmark::State& state) {
  const RootDatum& d = RootDatum::get("A2~");
  AffineElement x = from_word(d, {1, 0, 2, 1, 0, 2, 1, 0});
  Orientation o = Orientation::at_infinity(d.longest_element());
  for (auto _ : state) benchmark::DoNotOptimize(shadow_recursive(d, x, o).elements.size());
}
BENCHMARK(BM_shadow_recursive);

static void BM_gallery_character(benchmark::State& state) {
  const RootDatum& d = RootDatum::get("A2~");
  Weight lam = d.theta_coroot();
  for (auto _ : state) benchmark::DoNotOptimize(gallery_character(d, lam).size());
}
BENCHMARK(BM_gallery_character);

BENCHMARK_MAIN();
