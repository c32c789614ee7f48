#include <benchmark/benchmark.h>

#include "balo/transfer.hpp"

namespace {

void BM_TransferValue(benchmark::State& state) {
  const auto id = balo::kAllTransferFunctions[static_cast<std::size_t>(state.range(0))];
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(balo::transfer_value(id, x));
    x += 0.001;
    if (x > 4.0) x = -4.0;
  }
}
BENCHMARK(BM_TransferValue)->DenseRange(0, 7);

void BM_BinarizeS(benchmark::State& state) {
  const std::size_t dims = static_cast<std::size_t>(state.range(0));
  std::vector<double> step(dims, 0.3);
  balo::RandomStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        balo::binarize_s(step, balo::TransferFunctionId::S1, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dims));
}
BENCHMARK(BM_BinarizeS)->Arg(9)->Arg(36)->Arg(325);

}  // namespace
