#pragma once

#include <span>
#include <vector>

#include "balo/binary_alo.hpp"

namespace balo {

/// Binary PSO parameters; the transfer function is overridable for
/// ablations but defaults to the classic sigmoid.
struct PsoConfig {
  double inertia = 0.1;
  double c1 = 0.1;  ///< individual-best acceleration factor
  double c2 = 0.1;  ///< global-best acceleration factor
  double v_max = 6.0;
  TransferFunctionId transfer = TransferFunctionId::S0;
};

/// Binary GSA parameters.
struct GsaConfig {
  double g0 = 100.0;
  double alpha_decay = 20.0;
  TransferFunctionId transfer = TransferFunctionId::V0;
};

/// One PSO velocity component: inertia*v + c1*r1*(pbest - x) +
/// c2*r2*(gbest - x), clamped to [-v_max, v_max].
double pso_velocity_update(double v, double x, double pbest, double gbest,
                           const PsoConfig& pso, double r1, double r2);

/// G(t) = g0 * exp(-alpha_decay * t / T).
double gravity_constant(double g0, double alpha_decay, std::size_t t, std::size_t T);

/// Attracting-set size, linearly decreasing from `population` at the start
/// of the run to 1 at t = T.
std::size_t kbest_size(std::size_t population, std::size_t t, std::size_t T);

/// Min-max-normalized inverted fitness (minimization: the lowest fitness
/// gets the largest mass), scaled to sum to 1. Equal fitnesses yield equal
/// masses.
std::vector<double> normalized_masses(std::span<const double> fitness_values);

/// Binary PSO: v <- inertia*v + c1*r1*(pbest - x) + c2*r2*(gbest - x),
/// clamped to [-v_max, v_max]; positions re-sampled through the transfer
/// function each iteration. Same evaluation budget shape as the ALO runs
/// (population per iteration plus population at init).
RunResult run_bpso(const PsoConfig& pso, const OptimizerConfig& cfg,
                   FitnessEvaluator& evaluator, RandomStream& rng);
RunResult run_bpso(const PsoConfig& pso, const OptimizerConfig& cfg, const Dataset& ds,
                   const FoldPlan& plan, RandomStream& rng);

/// Binary GSA: masses from normalized inverted fitness, accelerations from
/// pairwise attraction over the Kbest set, v <- r*v + a, bits flipped with
/// probability T(v) against the current position. Budget-matched to BPSO.
RunResult run_bgsa(const GsaConfig& gsa, const OptimizerConfig& cfg,
                   FitnessEvaluator& evaluator, RandomStream& rng);
RunResult run_bgsa(const GsaConfig& gsa, const OptimizerConfig& cfg, const Dataset& ds,
                   const FoldPlan& plan, RandomStream& rng);

}  // namespace balo
