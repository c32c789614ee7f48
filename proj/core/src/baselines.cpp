#include "balo/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace balo {
namespace {

FeatureMask random_mask(std::size_t n_features, RandomStream& rng) {
  FeatureMask mask(n_features);
  for (std::size_t d = 0; d < n_features; ++d) mask.set(d, rng.coin());
  return mask;
}

FeatureMask binarize_position(std::span<const double> velocity, const FeatureMask& current,
                              TransferFunctionId transfer, RandomStream& rng) {
  if (family_of(transfer) == TransferFamily::kSShaped) {
    return binarize_s(velocity, transfer, rng);
  }
  return binarize_v(velocity, current, transfer, rng);
}

struct RunTracker {
  std::uint64_t requests_before;
  std::uint64_t invocations_before;
  std::chrono::steady_clock::time_point start;

  explicit RunTracker(const FitnessEvaluator& evaluator)
      : requests_before(evaluator.requests()),
        invocations_before(evaluator.classifier_invocations()),
        start(std::chrono::steady_clock::now()) {}

  void finish(RunResult& result, const FitnessEvaluator& evaluator,
              const FeatureMask& best_mask, const FitnessValue& best) const {
    result.best_mask = best_mask;
    result.best_fitness = best;
    result.accuracy = 1.0 - best.error_rate;
    result.subset_size = best.subset_size;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.evaluations = evaluator.requests() - requests_before;
    result.classifier_invocations =
        evaluator.classifier_invocations() - invocations_before;
  }
};

void validate_shared(const OptimizerConfig& cfg) {
  if (cfg.population < 2) {
    throw std::invalid_argument("OptimizerConfig: population must be at least 2");
  }
  if (cfg.iterations < 1) {
    throw std::invalid_argument("OptimizerConfig: iterations must be at least 1");
  }
}

}  // namespace

double pso_velocity_update(double v, double x, double pbest, double gbest,
                           const PsoConfig& pso, double r1, double r2) {
  const double next =
      pso.inertia * v + pso.c1 * r1 * (pbest - x) + pso.c2 * r2 * (gbest - x);
  return std::clamp(next, -pso.v_max, pso.v_max);
}

double gravity_constant(double g0, double alpha_decay, std::size_t t, std::size_t T) {
  return g0 * std::exp(-alpha_decay * static_cast<double>(t) / static_cast<double>(T));
}

std::size_t kbest_size(std::size_t population, std::size_t t, std::size_t T) {
  const double k = static_cast<double>(population) -
                   (static_cast<double>(population) - 1.0) *
                       (static_cast<double>(t) / static_cast<double>(T));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(k)));
}

std::vector<double> normalized_masses(std::span<const double> fitness_values) {
  const std::size_t n = fitness_values.size();
  if (n == 0) {
    throw std::invalid_argument("normalized_masses: empty fitness vector");
  }
  const auto [lo, hi] = std::minmax_element(fitness_values.begin(), fitness_values.end());
  std::vector<double> masses(n);
  if (*hi == *lo) {
    std::fill(masses.begin(), masses.end(), 1.0 / static_cast<double>(n));
    return masses;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    masses[i] = (*hi - fitness_values[i]) / (*hi - *lo);
    total += masses[i];
  }
  for (auto& m : masses) m /= total;
  return masses;
}

RunResult run_bpso(const PsoConfig& pso, const OptimizerConfig& cfg,
                   FitnessEvaluator& evaluator, RandomStream& rng) {
  validate_shared(cfg);
  if (pso.v_max <= 0.0 || pso.inertia < 0.0 || pso.c1 < 0.0 || pso.c2 < 0.0) {
    throw std::invalid_argument("PsoConfig: negative coefficient or non-positive v_max");
  }
  const std::size_t n = cfg.population;
  const std::size_t dims = evaluator.dataset().n_features;
  const RunTracker tracker(evaluator);

  RandomStream init_rng = rng.spawn();
  std::vector<FeatureMask> positions;
  positions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) positions.push_back(random_mask(dims, init_rng));
  std::vector<std::vector<double>> velocities(n, std::vector<double>(dims, 0.0));

  std::vector<FitnessValue> fitness(n);
  for (std::size_t i = 0; i < n; ++i) fitness[i] = evaluator(positions[i]);

  std::vector<FeatureMask> pbest = positions;
  std::vector<FitnessValue> pbest_fitness = fitness;
  std::size_t gbest_idx = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (pbest_fitness[i].value < pbest_fitness[gbest_idx].value) gbest_idx = i;
  }
  FeatureMask gbest = pbest[gbest_idx];
  FitnessValue gbest_fitness = pbest_fitness[gbest_idx];

  RunResult result;
  result.fitness_history.reserve(cfg.iterations + 1);
  result.fitness_history.push_back(gbest_fitness.value);

  for (std::size_t t = 1; t <= cfg.iterations; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      RandomStream velocity_rng = rng.spawn();
      RandomStream binarize_rng = rng.spawn();

      auto& v = velocities[i];
      for (std::size_t d = 0; d < dims; ++d) {
        const double r1 = velocity_rng.uniform01();
        const double r2 = velocity_rng.uniform01();
        const double x = positions[i].test(d) ? 1.0 : 0.0;
        const double pb = pbest[i].test(d) ? 1.0 : 0.0;
        const double gb = gbest.test(d) ? 1.0 : 0.0;
        v[d] = pso_velocity_update(v[d], x, pb, gb, pso, r1, r2);
      }
      positions[i] = binarize_position(v, positions[i], pso.transfer, binarize_rng);
    }

    for (std::size_t i = 0; i < n; ++i) {
      fitness[i] = evaluator(positions[i]);
      if (fitness[i].value < pbest_fitness[i].value) {
        pbest[i] = positions[i];
        pbest_fitness[i] = fitness[i];
      }
      if (fitness[i].value < gbest_fitness.value) {
        gbest = positions[i];
        gbest_fitness = fitness[i];
      }
    }
    result.fitness_history.push_back(gbest_fitness.value);
  }

  tracker.finish(result, evaluator, gbest, gbest_fitness);
  return result;
}

RunResult run_bpso(const PsoConfig& pso, const OptimizerConfig& cfg, const Dataset& ds,
                   const FoldPlan& plan, RandomStream& rng) {
  FitnessEvaluator evaluator(ds, plan, cfg.weights, cfg.k_neighbors);
  return run_bpso(pso, cfg, evaluator, rng);
}

RunResult run_bgsa(const GsaConfig& gsa, const OptimizerConfig& cfg,
                   FitnessEvaluator& evaluator, RandomStream& rng) {
  validate_shared(cfg);
  if (gsa.g0 <= 0.0 || gsa.alpha_decay <= 0.0) {
    throw std::invalid_argument("GsaConfig: g0 and alpha_decay must be positive");
  }
  const std::size_t n = cfg.population;
  const std::size_t dims = evaluator.dataset().n_features;
  constexpr double kEps = 1e-10;
  const RunTracker tracker(evaluator);

  RandomStream init_rng = rng.spawn();
  std::vector<FeatureMask> positions;
  positions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) positions.push_back(random_mask(dims, init_rng));
  std::vector<std::vector<double>> velocities(n, std::vector<double>(dims, 0.0));

  std::vector<FitnessValue> fitness(n);
  for (std::size_t i = 0; i < n; ++i) fitness[i] = evaluator(positions[i]);

  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (fitness[i].value < fitness[best_idx].value) best_idx = i;
  }
  FeatureMask best_mask = positions[best_idx];
  FitnessValue best_fitness = fitness[best_idx];

  RunResult result;
  result.fitness_history.reserve(cfg.iterations + 1);
  result.fitness_history.push_back(best_fitness.value);

  std::vector<double> fitness_values(n);
  std::vector<std::vector<double>> accel(n, std::vector<double>(dims, 0.0));

  for (std::size_t t = 1; t <= cfg.iterations; ++t) {
    for (std::size_t i = 0; i < n; ++i) fitness_values[i] = fitness[i].value;
    const std::vector<double> masses = normalized_masses(fitness_values);
    const double g = gravity_constant(gsa.g0, gsa.alpha_decay, t, cfg.iterations);

    // attracting set: the kbest agents with the lowest fitness
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (fitness_values[a] != fitness_values[b]) {
        return fitness_values[a] < fitness_values[b];
      }
      return a < b;
    });
    order.resize(kbest_size(n, t, cfg.iterations));

    for (std::size_t i = 0; i < n; ++i) {
      RandomStream force_rng = rng.spawn();
      RandomStream velocity_rng = rng.spawn();
      RandomStream binarize_rng = rng.spawn();

      auto& a = accel[i];
      std::fill(a.begin(), a.end(), 0.0);
      for (const auto j : order) {
        if (j == i) continue;
        const double r_ij = std::sqrt(
            static_cast<double>(positions[i].hamming_distance(positions[j])));
        const double pull = g * masses[j] / (r_ij + kEps);
        for (std::size_t d = 0; d < dims; ++d) {
          const double xj = positions[j].test(d) ? 1.0 : 0.0;
          const double xi = positions[i].test(d) ? 1.0 : 0.0;
          a[d] += force_rng.uniform01() * pull * (xj - xi);
        }
      }

      auto& v = velocities[i];
      for (std::size_t d = 0; d < dims; ++d) {
        v[d] = velocity_rng.uniform01() * v[d] + a[d];
      }
      positions[i] = binarize_position(v, positions[i], gsa.transfer, binarize_rng);
    }

    for (std::size_t i = 0; i < n; ++i) {
      fitness[i] = evaluator(positions[i]);
      if (fitness[i].value < best_fitness.value) {
        best_mask = positions[i];
        best_fitness = fitness[i];
      }
    }
    result.fitness_history.push_back(best_fitness.value);
  }

  tracker.finish(result, evaluator, best_mask, best_fitness);
  return result;
}

RunResult run_bgsa(const GsaConfig& gsa, const OptimizerConfig& cfg, const Dataset& ds,
                   const FoldPlan& plan, RandomStream& rng) {
  FitnessEvaluator evaluator(ds, plan, cfg.weights, cfg.k_neighbors);
  return run_bgsa(gsa, cfg, evaluator, rng);
}

}  // namespace balo
