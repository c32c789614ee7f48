#pragma once

#include <cstddef>
#include <span>

#include "balo/dataset.hpp"
#include "balo/feature_mask.hpp"

namespace balo {

/// Euclidean distance over the selected feature subspace only.
/// Throws std::invalid_argument on an empty mask or a length mismatch.
double masked_distance(std::span<const double> a, std::span<const double> b,
                       const FeatureMask& mask);

/// Majority vote among the k nearest training rows under the masked
/// distance. Neighbors are ordered by (distance, position in
/// train_indices); a vote tie goes to the tied class whose neighbor is
/// nearest, and any remaining tie to the smaller class index. k is clamped
/// to the training-set size. Distances are compared squared internally.
int classify(const Dataset& ds, std::span<const std::size_t> train_indices,
             std::span<const double> query, const FeatureMask& mask,
             std::size_t k_neighbors);

/// k-fold cross-validated error rate: every instance of each fold is
/// classified against the union of the remaining folds (ascending index
/// order); returns misclassified / n_instances.
double cv_error(const Dataset& ds, const FeatureMask& mask, const FoldPlan& plan,
                std::size_t k_neighbors);

}  // namespace balo
