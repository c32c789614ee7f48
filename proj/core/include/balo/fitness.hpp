#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "balo/dataset.hpp"
#include "balo/feature_mask.hpp"

namespace balo {

/// Objective weights: alpha on the classification error, beta = 1 - alpha
/// on the selected-feature ratio.
struct FitnessWeights {
  double alpha = 0.99;
  double beta = 0.01;

  FitnessWeights() = default;
  explicit FitnessWeights(double a);
};

/// Minimized wrapper objective; "better" means strictly smaller value
/// everywhere in this codebase.
struct FitnessValue {
  double value = 1.0;
  double error_rate = 1.0;
  std::size_t subset_size = 0;
};

/// alpha * cv_error + beta * |R|/N. The empty mask is a defined worst case
/// (value 1.0, error 1.0), not an error; it is dominated by every
/// non-empty subset.
FitnessValue evaluate_fitness(const FeatureMask& mask, const Dataset& ds,
                              const FoldPlan& plan, FitnessWeights weights,
                              std::size_t k_neighbors);

/// Memoizing evaluator bound to one (dataset, plan, weights, k_neighbors).
/// One instance per optimization run; the cache key is the exact bit
/// pattern. Concurrent calls return values identical to the uncached path.
/// requests() counts every call, classifier_invocations() only cache misses.
class FitnessEvaluator {
 public:
  FitnessEvaluator(const Dataset& ds, const FoldPlan& plan, FitnessWeights weights,
                   std::size_t k_neighbors);

  FitnessValue operator()(const FeatureMask& mask);

  const Dataset& dataset() const { return ds_; }
  const FoldPlan& plan() const { return plan_; }
  FitnessWeights weights() const { return weights_; }
  std::size_t k_neighbors() const { return k_neighbors_; }

  std::uint64_t requests() const { return requests_.load(); }
  std::uint64_t classifier_invocations() const { return invocations_.load(); }
  std::uint64_t cache_hits() const { return requests() - classifier_invocations(); }

  void clear_cache();

 private:
  const Dataset& ds_;
  const FoldPlan& plan_;
  FitnessWeights weights_;
  std::size_t k_neighbors_;

  std::mutex mutex_;
  std::unordered_map<FeatureMask, FitnessValue, FeatureMaskHash> cache_;
  std::atomic<std::uint64_t> requests_{0};
  std::atomic<std::uint64_t> invocations_{0};
};

}  // namespace balo
