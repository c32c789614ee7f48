#include "balo/fitness.hpp"

#include <stdexcept>

#include "balo/knn.hpp"

namespace balo {

FitnessWeights::FitnessWeights(double a) : alpha(a), beta(1.0 - a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("FitnessWeights: alpha must lie in [0,1]");
  }
}

FitnessValue evaluate_fitness(const FeatureMask& mask, const Dataset& ds,
                              const FoldPlan& plan, FitnessWeights weights,
                              std::size_t k_neighbors) {
  if (mask.size() != ds.n_features) {
    throw std::invalid_argument("evaluate_fitness: mask length mismatch");
  }
  FitnessValue out;
  out.subset_size = mask.popcount();
  if (out.subset_size == 0) {
    out.value = 1.0;
    out.error_rate = 1.0;
    return out;
  }
  out.error_rate = cv_error(ds, mask, plan, k_neighbors);
  out.value = weights.alpha * out.error_rate +
              weights.beta * static_cast<double>(out.subset_size) /
                  static_cast<double>(ds.n_features);
  return out;
}

FitnessEvaluator::FitnessEvaluator(const Dataset& ds, const FoldPlan& plan,
                                   FitnessWeights weights, std::size_t k_neighbors)
    : ds_(ds), plan_(plan), weights_(weights), k_neighbors_(k_neighbors) {}

FitnessValue FitnessEvaluator::operator()(const FeatureMask& mask) {
  requests_.fetch_add(1, std::memory_order_relaxed);
  {
    std::lock_guard lock(mutex_);
    const auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
  }
  // compute outside the lock; a concurrent duplicate yields the same value
  const FitnessValue value = evaluate_fitness(mask, ds_, plan_, weights_, k_neighbors_);
  invocations_.fetch_add(1, std::memory_order_relaxed);
  {
    std::lock_guard lock(mutex_);
    cache_.emplace(mask, value);
  }
  return value;
}

void FitnessEvaluator::clear_cache() {
  std::lock_guard lock(mutex_);
  cache_.clear();
}

}  // namespace balo
