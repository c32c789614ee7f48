#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace balo {

/// N-length bit vector encoding a feature subset: bit d set means feature d
/// is selected. Backed by 64-bit words for cheap popcount, hashing and
/// hamming distance. The bitstring form is "1010"-style with bit 0 leftmost.
class FeatureMask {
 public:
  FeatureMask() = default;
  explicit FeatureMask(std::size_t n_features);

  /// Parse from a 0/1 string, bit 0 leftmost. Throws std::invalid_argument
  /// on any other character.
  static FeatureMask from_bits(std::string_view bits);

  std::size_t size() const { return size_; }

  bool test(std::size_t d) const {
    return (words_[d >> 6] >> (d & 63)) & 1u;
  }

  void set(std::size_t d, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (d & 63);
    if (value) {
      words_[d >> 6] |= bit;
    } else {
      words_[d >> 6] &= ~bit;
    }
  }

  void flip(std::size_t d) { words_[d >> 6] ^= std::uint64_t{1} << (d & 63); }

  std::size_t popcount() const;
  bool any() const { return popcount() > 0; }

  /// Indices of the selected features, ascending.
  std::vector<std::size_t> selected() const;

  /// Bits as 0.0/1.0 reals (the embedding of binary positions in [0,1]^N).
  std::vector<double> as_reals() const;

  std::string to_bits() const;

  std::size_t hamming_distance(const FeatureMask& other) const;

  bool operator==(const FeatureMask& other) const = default;

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct FeatureMaskHash {
  std::size_t operator()(const FeatureMask& m) const { return m.hash(); }
};

}  // namespace balo
