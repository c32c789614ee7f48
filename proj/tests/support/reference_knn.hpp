#pragma once

// Brute-force nearest-neighbor reference, coded independently of
// core/src/knn.cpp: it sorts the full candidate list instead of keeping a
// bounded insertion window and votes through an explicit count pass. Used
// as the agreement oracle for classify/cv_error.

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "balo/dataset.hpp"
#include "balo/feature_mask.hpp"

namespace testutil {

inline int reference_classify(const balo::Dataset& ds,
                              std::span<const std::size_t> train,
                              std::span<const double> query,
                              const balo::FeatureMask& mask, std::size_t k_neighbors) {
  struct Candidate {
    double sq_dist;
    std::size_t position;
    int label;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(train.size());
  for (std::size_t pos = 0; pos < train.size(); ++pos) {
    const auto row = ds.row(train[pos]);
    double sq = 0.0;
    for (std::size_t j = 0; j < ds.n_features; ++j) {
      if (!mask.test(j)) continue;
      const double diff = query[j] - row[j];
      sq += diff * diff;
    }
    candidates.push_back({sq, pos, ds.labels[train[pos]]});
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.sq_dist != b.sq_dist) return a.sq_dist < b.sq_dist;
    return a.position < b.position;
  });
  const std::size_t k = std::min(k_neighbors, candidates.size());

  std::map<int, int> votes;
  for (std::size_t i = 0; i < k; ++i) ++votes[candidates[i].label];
  int best_count = 0;
  for (const auto& [label, count] : votes) best_count = std::max(best_count, count);
  for (std::size_t i = 0; i < k; ++i) {
    if (votes[candidates[i].label] == best_count) return candidates[i].label;
  }
  return candidates.front().label;
}

inline double reference_cv_error(const balo::Dataset& ds, const balo::FeatureMask& mask,
                                 const balo::FoldPlan& plan, std::size_t k_neighbors) {
  std::size_t wrong = 0;
  std::size_t total = 0;
  for (std::size_t f = 0; f < plan.folds.size(); ++f) {
    std::vector<std::size_t> train;
    for (std::size_t g = 0; g < plan.folds.size(); ++g) {
      if (g == f) continue;
      train.insert(train.end(), plan.folds[g].begin(), plan.folds[g].end());
    }
    std::sort(train.begin(), train.end());
    for (const auto i : plan.folds[f]) {
      const int predicted = reference_classify(ds, train, ds.row(i), mask, k_neighbors);
      wrong += predicted != ds.labels[i];
      ++total;
    }
  }
  return static_cast<double>(wrong) / static_cast<double>(total);
}

}  // namespace testutil
