#include "balo/alo_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace balo {

double ratio_I(std::size_t t, std::size_t T) {
  if (t < 1 || t > T) {
    throw std::invalid_argument("ratio_I: iteration outside [1, T]");
  }
  // integer forms of kWSchedule's thresholds keep the steps exact
  int w = 0;
  if (10 * t > T) w = 2;
  if (2 * t > T) w = 3;
  if (4 * t > 3 * T) w = 4;
  if (10 * t > 9 * T) w = 5;
  if (20 * t > 19 * T) w = 6;
  if (w == 0) return 1.0;
  return 1.0 + std::pow(10.0, w) * (static_cast<double>(t) / static_cast<double>(T));
}

WalkBounds shrink_bounds(std::span<const double> global_c,
                         std::span<const double> global_d, double I) {
  if (I < 1.0) {
    throw std::invalid_argument("shrink_bounds: ratio must be at least 1");
  }
  if (global_c.size() != global_d.size()) {
    throw std::invalid_argument("shrink_bounds: bound length mismatch");
  }
  WalkBounds out;
  out.c.reserve(global_c.size());
  out.d.reserve(global_d.size());
  for (std::size_t i = 0; i < global_c.size(); ++i) {
    out.c.push_back(global_c[i] / I);
    out.d.push_back(global_d[i] / I);
  }
  return out;
}

WalkBounds center_bounds(std::span<const double> guide, const WalkBounds& shrunk,
                         RandomStream& rng) {
  if (guide.size() != shrunk.c.size() || guide.size() != shrunk.d.size()) {
    throw std::invalid_argument("center_bounds: dimension mismatch");
  }
  const double sign_c = rng.coin() ? 1.0 : -1.0;
  const double sign_d = rng.coin() ? 1.0 : -1.0;

  WalkBounds out;
  out.c.reserve(guide.size());
  out.d.reserve(guide.size());
  for (std::size_t i = 0; i < guide.size(); ++i) {
    double lo = guide[i] + sign_c * shrunk.c[i];
    double hi = guide[i] + sign_d * shrunk.d[i];
    if (lo > hi) std::swap(lo, hi);
    out.c.push_back(std::clamp(lo, 0.0, 1.0));
    out.d.push_back(std::clamp(hi, 0.0, 1.0));
  }
  return out;
}

std::vector<double> random_walk(std::size_t T, RandomStream& rng) {
  if (T < 1) {
    throw std::invalid_argument("random_walk: T must be at least 1");
  }
  std::vector<double> walk(T + 1);
  walk[0] = 0.0;
  for (std::size_t t = 1; t <= T; ++t) {
    walk[t] = walk[t - 1] + (rng.coin() ? 1.0 : -1.0);
  }
  return walk;
}

double walk_position(std::span<const double> walk, std::size_t t, double c, double d) {
  if (t < 1 || t >= walk.size()) {
    throw std::invalid_argument("walk_position: t outside [1, T]");
  }
  const auto [lo, hi] = std::minmax_element(walk.begin(), walk.end());
  if (*hi == *lo) return 0.5 * (c + d);
  return (walk[t] - *lo) * (d - c) / (*hi - *lo) + c;
}

std::size_t roulette_select(std::span<const double> fitness_values, RandomStream& rng) {
  if (fitness_values.empty()) {
    throw std::invalid_argument("roulette_select: empty fitness vector");
  }
  constexpr double kEps = 1e-10;  // guards a hypothetical exact-zero fitness
  double total = 0.0;
  for (const auto f : fitness_values) total += 1.0 / (f + kEps);

  const double target = rng.uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < fitness_values.size(); ++i) {
    acc += 1.0 / (fitness_values[i] + kEps);
    if (target < acc) return i;
  }
  return fitness_values.size() - 1;  // fp rounding at the top end
}

}  // namespace balo
