// Serial reference kernels against their OpenMP counterparts.
#include <vector>

#include <benchmark/benchmark.h>

#include "irrforge/extremal.hpp"
#include "irrforge/falsifier.hpp"
#include "irrforge/treegen.hpp"

namespace {

using namespace irrforge;

const DegreeSequence& bench_sequence() {
  static const DegreeSequence d({1, 1, 1, 1, 1, 2, 2, 3, 3, 3});
  return d;
}

const std::vector<int> kSpine{2, 3, 3, 4, 5, 6, 7, 8, 9};

void BM_UnlabeledClassesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unlabeled_classes_serial(bench_sequence()));
}

void BM_UnlabeledClassesParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(unlabeled_classes(bench_sequence(), static_cast<int>(state.range(0))));
}

void BM_ArrangementsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(extremal_over_arrangements_serial(kSpine));
}

void BM_ArrangementsParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(extremal_over_arrangements(kSpine, static_cast<int>(state.range(0))));
}

void BM_Scan(benchmark::State& state) {
  SearchSpace space;
  space.n_max = 8;
  space.workers = static_cast<int>(state.range(0));
  const auto ids = parse_bound_ids("all");
  for (auto _ : state) benchmark::DoNotOptimize(scan(space, ids));
}

}  // namespace

BENCHMARK(BM_UnlabeledClassesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnlabeledClassesParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArrangementsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArrangementsParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
