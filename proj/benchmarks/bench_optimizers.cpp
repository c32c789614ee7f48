#include <benchmark/benchmark.h>

#include "balo/baselines.hpp"
#include "balo/binary_alo.hpp"
#include "bench_support.hpp"

namespace {

// one full reference-parameter run on a mid-size problem
void BM_RunAlo(benchmark::State& state) {
  const auto ds = benchsupport::make_dataset(101, 16, 21);
  balo::RandomStream fold_rng(4);
  const balo::FoldPlan plan = balo::stratified_folds(ds, 10, fold_rng);
  balo::OptimizerConfig cfg;
  cfg.transfer = balo::kAllTransferFunctions[static_cast<std::size_t>(state.range(0))];

  std::uint64_t seed = 1;
  for (auto _ : state) {
    balo::RandomStream rng(seed++);
    benchmark::DoNotOptimize(balo::run_alo(cfg, ds, plan, rng));
  }
}
BENCHMARK(BM_RunAlo)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_RunBpso(benchmark::State& state) {
  const auto ds = benchsupport::make_dataset(101, 16, 22);
  balo::RandomStream fold_rng(5);
  const balo::FoldPlan plan = balo::stratified_folds(ds, 10, fold_rng);
  const balo::OptimizerConfig cfg;

  std::uint64_t seed = 1;
  for (auto _ : state) {
    balo::RandomStream rng(seed++);
    benchmark::DoNotOptimize(balo::run_bpso(balo::PsoConfig{}, cfg, ds, plan, rng));
  }
}
BENCHMARK(BM_RunBpso)->Unit(benchmark::kMillisecond);

void BM_RunBgsa(benchmark::State& state) {
  const auto ds = benchsupport::make_dataset(101, 16, 23);
  balo::RandomStream fold_rng(6);
  const balo::FoldPlan plan = balo::stratified_folds(ds, 10, fold_rng);
  const balo::OptimizerConfig cfg;

  std::uint64_t seed = 1;
  for (auto _ : state) {
    balo::RandomStream rng(seed++);
    benchmark::DoNotOptimize(balo::run_bgsa(balo::GsaConfig{}, cfg, ds, plan, rng));
  }
}
BENCHMARK(BM_RunBgsa)->Unit(benchmark::kMillisecond);

}  // namespace
