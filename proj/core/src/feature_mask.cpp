#include "balo/feature_mask.hpp"

#include <bit>
#include <stdexcept>

namespace balo {

FeatureMask::FeatureMask(std::size_t n_features)
    : size_(n_features), words_((n_features + 63) / 64, 0) {}

FeatureMask FeatureMask::from_bits(std::string_view bits) {
  FeatureMask mask(bits.size());
  for (std::size_t d = 0; d < bits.size(); ++d) {
    if (bits[d] == '1') {
      mask.set(d, true);
    } else if (bits[d] != '0') {
      throw std::invalid_argument("FeatureMask: bitstring may contain only 0 and 1");
    }
  }
  return mask;
}

std::size_t FeatureMask::popcount() const {
  std::size_t count = 0;
  for (const auto word : words_) count += std::popcount(word);
  return count;
}

std::vector<std::size_t> FeatureMask::selected() const {
  std::vector<std::size_t> indices;
  indices.reserve(popcount());
  for (std::size_t d = 0; d < size_; ++d) {
    if (test(d)) indices.push_back(d);
  }
  return indices;
}

std::vector<double> FeatureMask::as_reals() const {
  std::vector<double> reals(size_);
  for (std::size_t d = 0; d < size_; ++d) reals[d] = test(d) ? 1.0 : 0.0;
  return reals;
}

std::string FeatureMask::to_bits() const {
  std::string bits(size_, '0');
  for (std::size_t d = 0; d < size_; ++d) {
    if (test(d)) bits[d] = '1';
  }
  return bits;
}

std::size_t FeatureMask::hamming_distance(const FeatureMask& other) const {
  if (other.size_ != size_) {
    throw std::invalid_argument("FeatureMask: hamming_distance length mismatch");
  }
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    count += std::popcount(words_[w] ^ other.words_[w]);
  }
  return count;
}

std::size_t FeatureMask::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(size_);
  for (const auto word : words_) {
    h ^= word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace balo
