#include "balo/knn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace balo {
namespace {

struct Neighbor {
  double sq_dist;
  std::size_t order;  // position in the training list
  int label;
};

bool closer(const Neighbor& a, const Neighbor& b) {
  if (a.sq_dist != b.sq_dist) return a.sq_dist < b.sq_dist;
  return a.order < b.order;
}

double masked_sq_dist(const double* a, const double* b,
                      std::span<const std::size_t> selected) {
  double sum = 0.0;
  for (const auto j : selected) {
    const double diff = a[j] - b[j];
    sum += diff * diff;
  }
  return sum;
}

// Keeps the k closest neighbors sorted ascending; k is small so the linear
// insert beats a heap.
void bounded_insert(std::vector<Neighbor>& top, std::size_t k, Neighbor cand) {
  if (top.size() == k && !closer(cand, top.back())) return;
  const auto pos = std::upper_bound(top.begin(), top.end(), cand, closer);
  if (top.size() == k) top.pop_back();
  top.insert(pos, cand);
}

int classify_selected(const Dataset& ds, std::span<const std::size_t> train,
                      const double* query, std::span<const std::size_t> selected,
                      std::size_t k_neighbors, std::vector<Neighbor>& top,
                      std::vector<int>& votes) {
  const std::size_t k = std::min(k_neighbors, train.size());
  top.clear();
  for (std::size_t pos = 0; pos < train.size(); ++pos) {
    const std::size_t idx = train[pos];
    const double d2 = masked_sq_dist(query, ds.features.data() + idx * ds.n_features, selected);
    bounded_insert(top, k, Neighbor{d2, pos, ds.labels[idx]});
  }

  votes.assign(ds.n_classes, 0);
  for (const auto& nb : top) ++votes[static_cast<std::size_t>(nb.label)];
  const int best_count = *std::max_element(votes.begin(), votes.end());
  for (const auto& nb : top) {  // nearest tied class wins
    if (votes[static_cast<std::size_t>(nb.label)] == best_count) return nb.label;
  }
  return top.front().label;  // unreachable for non-empty top
}

}  // namespace

double masked_distance(std::span<const double> a, std::span<const double> b,
                       const FeatureMask& mask) {
  if (a.size() != b.size() || a.size() != mask.size()) {
    throw std::invalid_argument("masked_distance: length mismatch");
  }
  if (!mask.any()) {
    throw std::invalid_argument("masked_distance: empty feature mask");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (mask.test(j)) {
      const double diff = a[j] - b[j];
      sum += diff * diff;
    }
  }
  return std::sqrt(sum);
}

int classify(const Dataset& ds, std::span<const std::size_t> train_indices,
             std::span<const double> query, const FeatureMask& mask,
             std::size_t k_neighbors) {
  if (train_indices.empty()) {
    throw std::invalid_argument("classify: empty training set");
  }
  if (k_neighbors == 0) {
    throw std::invalid_argument("classify: k_neighbors must be at least 1");
  }
  if (mask.size() != ds.n_features || query.size() != ds.n_features) {
    throw std::invalid_argument("classify: dimension mismatch");
  }
  const auto selected = mask.selected();
  if (selected.empty()) {
    throw std::invalid_argument("classify: empty feature mask");
  }
  std::vector<Neighbor> top;
  std::vector<int> votes;
  return classify_selected(ds, train_indices, query.data(), selected, k_neighbors,
                           top, votes);
}

double cv_error(const Dataset& ds, const FeatureMask& mask, const FoldPlan& plan,
                std::size_t k_neighbors) {
  if (plan.folds.size() < 2) {
    throw std::invalid_argument("cv_error: fold plan needs at least two folds");
  }
  const auto selected = mask.selected();
  if (selected.empty()) {
    throw std::invalid_argument("cv_error: empty feature mask");
  }

  std::vector<std::size_t> train;
  std::vector<Neighbor> top;
  std::vector<int> votes;
  std::size_t wrong = 0;
  std::size_t total = 0;

  for (std::size_t f = 0; f < plan.folds.size(); ++f) {
    train.clear();
    for (std::size_t g = 0; g < plan.folds.size(); ++g) {
      if (g == f) continue;
      train.insert(train.end(), plan.folds[g].begin(), plan.folds[g].end());
    }
    std::sort(train.begin(), train.end());

    for (const auto i : plan.folds[f]) {
      const int predicted =
          classify_selected(ds, train, ds.features.data() + i * ds.n_features,
                            selected, k_neighbors, top, votes);
      wrong += predicted != ds.labels[i];
      ++total;
    }
  }
  return static_cast<double>(wrong) / static_cast<double>(total);
}

}  // namespace balo
