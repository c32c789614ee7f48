#pragma once

#include <cstdint>
#include <vector>

#include "balo/alo_engine.hpp"
#include "balo/fitness.hpp"
#include "balo/transfer.hpp"

namespace balo {

struct OptimizerConfig {
  std::size_t population = 8;
  std::size_t iterations = 70;
  TransferFunctionId transfer = TransferFunctionId::V3;
  FitnessWeights weights{};
  std::size_t k_neighbors = 5;
};

/// Paired ant/antlion populations plus the elite. All masks share the
/// dataset's feature count; population sizes are fixed for the whole run.
struct Colony {
  std::vector<FeatureMask> ants;
  std::vector<FeatureMask> antlions;
  std::vector<FitnessValue> ant_fitness;
  std::vector<FitnessValue> antlion_fitness;
  FeatureMask elite;
  FitnessValue elite_fitness;
  std::size_t iteration = 0;
};

/// Outcome of one optimization run; shared by the ALO variants and the
/// PSO/GSA baselines.
struct RunResult {
  FeatureMask best_mask;
  FitnessValue best_fitness;
  double accuracy = 0.0;
  std::size_t subset_size = 0;
  /// Elite/best-so-far fitness per iteration, entry 0 taken after
  /// initialization; length iterations + 1, non-increasing.
  std::vector<double> fitness_history;
  double elapsed_seconds = 0.0;
  std::uint64_t evaluations = 0;             ///< fitness requests, cache hits included
  std::uint64_t classifier_invocations = 0;  ///< cache misses
};

/// Both populations drawn bit-wise Bernoulli(0.5) from `rng` (ants first),
/// then all 2n solutions evaluated; the fittest antlion becomes the elite.
Colony initialize_colony(const OptimizerConfig& cfg, FitnessEvaluator& evaluator,
                         RandomStream& rng);

/// One ant's walk around `guide` at iteration t of T: shrink the [0,1]
/// bounds by ratio_I, center them on the guide, take a fresh per-dimension
/// random walk's position at t, form step = position - guide, and binarize
/// with the configured transfer function (v-shaped rules flip the guide's
/// bits). The walk stream supplies the two bound signs, then T coins per
/// dimension in index order; the binarize stream one uniform per dimension.
FeatureMask guided_binary_walk(const FeatureMask& guide, TransferFunctionId transfer,
                               std::size_t t, std::size_t T, RandomStream& walk_rng,
                               RandomStream& binarize_rng);

/// One iteration: per ant, roulette-select a guiding antlion (over the
/// iteration's pre-update fitness snapshot), take the elite-guided and
/// selection-guided walks, uniform-crossover them into the new ant;
/// re-evaluate all ants, let each antlion adopt its ant when strictly
/// fitter, then refresh the elite. Sub-streams are spawned per ant in the
/// order roulette, walk-1, binarize-1, walk-2, binarize-2, crossover.
void alo_step(Colony& colony, const OptimizerConfig& cfg, FitnessEvaluator& evaluator,
              RandomStream& rng);

/// Full run against a shared evaluator (its cache persists across calls;
/// evaluation counters in the result are deltas for this run only).
RunResult run_alo(const OptimizerConfig& cfg, FitnessEvaluator& evaluator,
                  RandomStream& rng);

/// Full run with a private evaluator, i.e. a fresh memo cache per run.
RunResult run_alo(const OptimizerConfig& cfg, const Dataset& ds, const FoldPlan& plan,
                  RandomStream& rng);

}  // namespace balo
