#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "balo/rng.hpp"

namespace balo {

/// In-memory classification dataset. Features are stored row-major; labels
/// are dense class indices assigned by first appearance in the source file,
/// so KNN voting is independent of the label representation. Instances are
/// immutable after loading.
struct Dataset {
  std::string name;
  std::size_t n_instances = 0;
  std::size_t n_features = 0;
  std::size_t n_classes = 0;
  std::vector<double> features;  ///< n_instances * n_features, row-major
  std::vector<int> labels;       ///< values in [0, n_classes)

  std::span<const double> row(std::size_t i) const {
    return {features.data() + i * n_features, n_features};
  }
};

/// Load a comma-separated file with the class label in the last column and
/// an optional single header row. Labels may be arbitrary strings or
/// numbers. Features are left un-normalized. Throws DatasetError on a
/// missing file, ragged rows, non-numeric or missing feature cells, fewer
/// than two columns, or fewer than two distinct classes.
Dataset load_csv(const std::filesystem::path& path, bool has_header);

/// Per-column min-max normalization to [0,1]. Constant columns map to all
/// zeros rather than being dropped, keeping the feature count stable.
Dataset normalize_min_max(Dataset ds);

/// k disjoint index lists that partition 0..n_instances-1 exactly.
struct FoldPlan {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> folds;
};

/// Seeded stratified k-fold split. Per class the indices are shuffled and
/// dealt round-robin; the fold cursor continues across classes, which keeps
/// both per-class fold counts and total fold sizes within one of each
/// other. Throws std::invalid_argument when k < 2 or k > n_instances.
FoldPlan stratified_folds(const Dataset& ds, std::size_t k, RandomStream& rng);

}  // namespace balo
