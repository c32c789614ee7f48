#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "balo/rng.hpp"

namespace balo {

/// Per-dimension random-walk bounds, kept inside the [0,1] search domain.
struct WalkBounds {
  std::vector<double> c;  ///< lower
  std::vector<double> d;  ///< upper
};

/// Iteration thresholds (as fractions of T) and exploitation exponents.
struct WScheduleEntry {
  double threshold;
  int w;
};

inline constexpr std::array<WScheduleEntry, 5> kWSchedule{{
    {0.1, 2}, {0.5, 3}, {0.75, 4}, {0.9, 5}, {0.95, 6},
}};

/// Radius-shrinking ratio: 1 while t <= 0.1 T, afterwards 1 + 10^w * t/T
/// with w stepping through kWSchedule (largest satisfied threshold wins).
/// Thresholds are compared in exact integer arithmetic.
/// Throws std::invalid_argument when t is outside [1, T].
double ratio_I(std::size_t t, std::size_t T);

/// Element-wise division of the global bounds by I.
/// Throws std::invalid_argument when I < 1.
WalkBounds shrink_bounds(std::span<const double> global_c,
                         std::span<const double> global_d, double I);

/// Trap-centered interval around the guiding position: each bound vector is
/// offset by a fair-coin sign (one coin per bound vector, lower drawn
/// first), then clamped to [0,1] and reordered so c <= d per dimension.
WalkBounds center_bounds(std::span<const double> guide, const WalkBounds& shrunk,
                         RandomStream& rng);

/// Cumulative +-1 walk of length T+1; element 0 is 0 and each step is +1
/// iff a fresh uniform is below 0.5.
std::vector<double> random_walk(std::size_t T, RandomStream& rng);

/// Min-max map of walk element t into [c, d]; midpoint for a flat walk.
/// Throws std::invalid_argument when t is outside [1, walk.size() - 1].
double walk_position(std::span<const double> walk, std::size_t t, double c, double d);

/// Fitness-proportional pick over minimized values: index i is selected
/// with probability (1/(f_i + eps)) / sum_j (1/(f_j + eps)), eps = 1e-10.
/// Throws std::invalid_argument on an empty vector.
std::size_t roulette_select(std::span<const double> fitness_values, RandomStream& rng);

}  // namespace balo
