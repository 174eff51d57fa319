#include <benchmark/benchmark.h>

#include <random>

#include "dqc1/branching_program.hpp"
#include "dqc1/formula.hpp"
#include "dqc1/register_state.hpp"
#include "dqc1/subspace_family.hpp"

namespace {

dqc1::FormulaAst sample_formula(unsigned depth) {
  std::mt19937_64 rng(1234);
  // Resample until the tree actually reaches the requested depth.
  for (;;) {
    auto f = dqc1::random_formula(rng, depth, 8);
    if (f.depth() == depth) return f;
  }
}

void BM_compile(benchmark::State& state) {
  const auto f = sample_formula(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::compile_formula(f));
  }
}
BENCHMARK(BM_compile)->Arg(4)->Arg(6)->Arg(8);

void BM_register_run(benchmark::State& state) {
  const auto f = sample_formula(static_cast<unsigned>(state.range(0)));
  const auto bp = dqc1::compile_formula(f);
  const std::vector<bool> assignment(f.num_vars(), true);
  const auto fresh = dqc1::RegisterState::fresh(3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::run_bp(fresh, bp, assignment));
  }
}
BENCHMARK(BM_register_run)->Arg(4)->Arg(6)->Arg(8);

void BM_wide_register_run(benchmark::State& state) {
  const auto f = sample_formula(5);
  const auto bp = dqc1::compile_formula(f);
  const std::vector<bool> assignment(f.num_vars(), true);
  const auto n = static_cast<unsigned>(state.range(0));
  const auto fresh = dqc1::RegisterState::fresh(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::run_bp(fresh, bp, assignment));
  }
}
BENCHMARK(BM_wide_register_run)->Arg(3)->Arg(6)->Arg(9);

void BM_overlap_stats(benchmark::State& state) {
  const auto family = dqc1::SubspaceFamily::parity(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqc1::overlap_stats(family));
  }
}
BENCHMARK(BM_overlap_stats)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
