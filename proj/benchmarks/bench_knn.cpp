#include <benchmark/benchmark.h>

#include "balo/fitness.hpp"
#include "balo/knn.hpp"
#include "bench_support.hpp"

namespace {

// cross-validated error over the full mask; the dominant cost of every run
void BM_CvError(benchmark::State& state) {
  const auto ds = benchsupport::make_dataset(static_cast<std::size_t>(state.range(0)),
                                             static_cast<std::size_t>(state.range(1)), 11);
  balo::RandomStream fold_rng(2);
  const balo::FoldPlan plan = balo::stratified_folds(ds, 10, fold_rng);
  balo::FeatureMask mask(ds.n_features);
  for (std::size_t d = 0; d < ds.n_features; ++d) mask.set(d, true);

  for (auto _ : state) {
    benchmark::DoNotOptimize(balo::cv_error(ds, mask, plan, 5));
  }
}
BENCHMARK(BM_CvError)
    ->Args({101, 16})
    ->Args({178, 13})
    ->Args({270, 13})
    ->Args({699, 9})
    ->Unit(benchmark::kMillisecond);

void BM_FitnessEvaluatorCached(benchmark::State& state) {
  const auto ds = benchsupport::make_dataset(178, 13, 12);
  balo::RandomStream fold_rng(3);
  const balo::FoldPlan plan = balo::stratified_folds(ds, 10, fold_rng);
  balo::FitnessEvaluator evaluator(ds, plan, balo::FitnessWeights(0.99), 5);
  balo::FeatureMask mask(13);
  for (std::size_t d = 0; d < 13; d += 2) mask.set(d, true);
  evaluator(mask);  // warm the cache

  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator(mask));
  }
}
BENCHMARK(BM_FitnessEvaluatorCached);

}  // namespace
