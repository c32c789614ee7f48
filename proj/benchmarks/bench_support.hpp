#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "balo/dataset.hpp"
#include "balo/rng.hpp"

namespace benchsupport {

inline double gaussian(balo::RandomStream& rng) {
  double u1 = rng.uniform01();
  while (u1 <= 0.0) u1 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * rng.uniform01());
}

/// Two-class Gaussian benchmark dataset, pre-normalized.
inline balo::Dataset make_dataset(std::size_t n_instances, std::size_t n_features,
                                  std::uint64_t seed) {
  balo::RandomStream rng(seed);
  balo::Dataset ds;
  ds.name = "bench";
  ds.n_instances = n_instances;
  ds.n_features = n_features;
  ds.n_classes = 2;
  for (std::size_t i = 0; i < n_instances; ++i) {
    const int label = i % 2;
    for (std::size_t j = 0; j < n_features; ++j) {
      const double shift = j < 3 ? 1.5 * label : 0.0;
      ds.features.push_back(shift + gaussian(rng));
    }
    ds.labels.push_back(label);
  }
  return normalize_min_max(std::move(ds));
}

}  // namespace benchsupport
