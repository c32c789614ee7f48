#include "balo/binary_alo.hpp"

#include <chrono>
#include <stdexcept>

namespace balo {
namespace {

FeatureMask random_mask(std::size_t n_features, RandomStream& rng) {
  FeatureMask mask(n_features);
  for (std::size_t d = 0; d < n_features; ++d) mask.set(d, rng.coin());
  return mask;
}

std::size_t best_index(const std::vector<FitnessValue>& fitness) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i].value < fitness[best].value) best = i;
  }
  return best;
}

void validate_config(const OptimizerConfig& cfg) {
  if (cfg.population < 2) {
    throw std::invalid_argument("OptimizerConfig: population must be at least 2");
  }
  if (cfg.iterations < 1) {
    throw std::invalid_argument("OptimizerConfig: iterations must be at least 1");
  }
}

}  // namespace

Colony initialize_colony(const OptimizerConfig& cfg, FitnessEvaluator& evaluator,
                         RandomStream& rng) {
  validate_config(cfg);
  const std::size_t n_features = evaluator.dataset().n_features;

  Colony colony;
  colony.ants.reserve(cfg.population);
  colony.antlions.reserve(cfg.population);
  for (std::size_t i = 0; i < cfg.population; ++i) {
    colony.ants.push_back(random_mask(n_features, rng));
  }
  for (std::size_t i = 0; i < cfg.population; ++i) {
    colony.antlions.push_back(random_mask(n_features, rng));
  }

  colony.ant_fitness.reserve(cfg.population);
  colony.antlion_fitness.reserve(cfg.population);
  for (const auto& ant : colony.ants) colony.ant_fitness.push_back(evaluator(ant));
  for (const auto& antlion : colony.antlions) {
    colony.antlion_fitness.push_back(evaluator(antlion));
  }

  const std::size_t best = best_index(colony.antlion_fitness);
  colony.elite = colony.antlions[best];
  colony.elite_fitness = colony.antlion_fitness[best];
  colony.iteration = 0;
  return colony;
}

FeatureMask guided_binary_walk(const FeatureMask& guide, TransferFunctionId transfer,
                               std::size_t t, std::size_t T, RandomStream& walk_rng,
                               RandomStream& binarize_rng) {
  const std::size_t n = guide.size();
  const double I = ratio_I(t, T);

  const std::vector<double> global_c(n, 0.0);
  const std::vector<double> global_d(n, 1.0);
  const WalkBounds shrunk = shrink_bounds(global_c, global_d, I);
  const std::vector<double> guide_reals = guide.as_reals();
  const WalkBounds bounds = center_bounds(guide_reals, shrunk, walk_rng);

  std::vector<double> step(n);
  for (std::size_t dim = 0; dim < n; ++dim) {
    const std::vector<double> walk = random_walk(T, walk_rng);
    step[dim] = walk_position(walk, t, bounds.c[dim], bounds.d[dim]) - guide_reals[dim];
  }

  if (family_of(transfer) == TransferFamily::kSShaped) {
    return binarize_s(step, transfer, binarize_rng);
  }
  return binarize_v(step, guide, transfer, binarize_rng);
}

void alo_step(Colony& colony, const OptimizerConfig& cfg, FitnessEvaluator& evaluator,
              RandomStream& rng) {
  if (colony.iteration >= cfg.iterations) {
    throw std::logic_error("alo_step: iteration budget exhausted");
  }
  const std::size_t T = cfg.iterations;
  const std::size_t t = colony.iteration + 1;

  // fitness snapshot: every ant this iteration selects from the same wheel
  std::vector<double> wheel(colony.antlion_fitness.size());
  for (std::size_t i = 0; i < wheel.size(); ++i) {
    wheel[i] = colony.antlion_fitness[i].value;
  }

  for (std::size_t a = 0; a < cfg.population; ++a) {
    RandomStream roulette_rng = rng.spawn();
    RandomStream walk1_rng = rng.spawn();
    RandomStream binarize1_rng = rng.spawn();
    RandomStream walk2_rng = rng.spawn();
    RandomStream binarize2_rng = rng.spawn();
    RandomStream crossover_rng = rng.spawn();

    const std::size_t selected = roulette_select(wheel, roulette_rng);
    const FeatureMask rw1 =
        guided_binary_walk(colony.elite, cfg.transfer, t, T, walk1_rng, binarize1_rng);
    const FeatureMask rw2 = guided_binary_walk(colony.antlions[selected], cfg.transfer,
                                               t, T, walk2_rng, binarize2_rng);

    FeatureMask child(rw1.size());
    for (std::size_t d = 0; d < rw1.size(); ++d) {
      child.set(d, crossover_rng.coin() ? rw1.test(d) : rw2.test(d));
    }
    colony.ants[a] = std::move(child);
  }

  for (std::size_t a = 0; a < cfg.population; ++a) {
    colony.ant_fitness[a] = evaluator(colony.ants[a]);
  }

  for (std::size_t a = 0; a < cfg.population; ++a) {
    if (colony.ant_fitness[a].value < colony.antlion_fitness[a].value) {
      colony.antlions[a] = colony.ants[a];
      colony.antlion_fitness[a] = colony.ant_fitness[a];
    }
  }

  const std::size_t best = best_index(colony.antlion_fitness);
  if (colony.antlion_fitness[best].value < colony.elite_fitness.value) {
    colony.elite = colony.antlions[best];
    colony.elite_fitness = colony.antlion_fitness[best];
  }
  ++colony.iteration;
}

RunResult run_alo(const OptimizerConfig& cfg, FitnessEvaluator& evaluator,
                  RandomStream& rng) {
  validate_config(cfg);
  const std::uint64_t requests_before = evaluator.requests();
  const std::uint64_t invocations_before = evaluator.classifier_invocations();
  const auto start = std::chrono::steady_clock::now();

  RandomStream init_rng = rng.spawn();
  Colony colony = initialize_colony(cfg, evaluator, init_rng);

  RunResult result;
  result.fitness_history.reserve(cfg.iterations + 1);
  result.fitness_history.push_back(colony.elite_fitness.value);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    alo_step(colony, cfg, evaluator, rng);
    result.fitness_history.push_back(colony.elite_fitness.value);
  }

  result.best_mask = colony.elite;
  result.best_fitness = colony.elite_fitness;
  result.accuracy = 1.0 - colony.elite_fitness.error_rate;
  result.subset_size = colony.elite_fitness.subset_size;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.evaluations = evaluator.requests() - requests_before;
  result.classifier_invocations = evaluator.classifier_invocations() - invocations_before;
  return result;
}

RunResult run_alo(const OptimizerConfig& cfg, const Dataset& ds, const FoldPlan& plan,
                  RandomStream& rng) {
  FitnessEvaluator evaluator(ds, plan, cfg.weights, cfg.k_neighbors);
  return run_alo(cfg, evaluator, rng);
}

}  // namespace balo
