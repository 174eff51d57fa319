#include <benchmark/benchmark.h>

#include "dqc1/bounds.hpp"
#include "dqc1/partition.hpp"

namespace {

void BM_dimension(benchmark::State& state) {
  const auto shape = dqc1::Partition::parse("[4,4,2,1]");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::irrep_dimension(shape));
  }
}
BENCHMARK(BM_dimension);

void BM_enumerate(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::partitions_of(m));
  }
}
BENCHMARK(BM_enumerate)->Arg(12)->Arg(18)->Arg(24);

void BM_branching_sum(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto shapes = dqc1::partitions_of(m);
  for (auto _ : state) {
    dqc1::BigNat total = 0;
    for (const auto& shape : shapes) {
      for (const auto& res : dqc1::restrictions(shape)) {
        total += dqc1::irrep_dimension(res);
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_branching_sum)->Arg(12)->Arg(16);

void BM_rasala_scan(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::check_rasala(m));
  }
}
BENCHMARK(BM_rasala_scan)->Arg(12)->Arg(16);

void BM_shape_scan(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::check_shape_lemma(m));
  }
}
BENCHMARK(BM_shape_scan)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
