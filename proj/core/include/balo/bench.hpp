#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balo/baselines.hpp"
#include "balo/binary_alo.hpp"

namespace balo {

/// One dataset in a manifest; relative paths resolve against the manifest's
/// directory.
struct DatasetEntry {
  std::string name;
  std::filesystem::path path;
  bool has_header = true;
};

/// JSON manifest: {"datasets": [{"name", "path", "has_header"}, ...]}.
/// Throws ConfigError on unreadable or malformed input.
std::vector<DatasetEntry> load_manifest(const std::filesystem::path& path);

/// Full experiment description. Defaults are the reference parameter set:
/// 20 runs, population 8, 70 iterations, 10-fold CV, alpha 0.99, 5
/// neighbors.
struct ExperimentConfig {
  std::filesystem::path manifest;
  std::vector<std::string> algorithms;
  std::size_t runs = 20;
  std::size_t population = 8;
  std::size_t iterations = 70;
  std::size_t k_cv = 10;
  std::size_t k_neighbors = 5;
  double alpha = 0.99;
  std::uint64_t base_seed = 1;
  std::filesystem::path output_dir = "results";
  std::size_t threads = 1;  ///< keep 1 when per-run timings matter
};

/// JSON config loader; unspecified fields keep the defaults above, unknown
/// keys are rejected. Throws ConfigError.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Registered algorithm names, in reporting order: alo-s1 alo-s2 alo-s3
/// alo-v1 alo-v2 alo-v3 balo1 balo2 bpso bgsa.
const std::vector<std::string>& known_algorithms();
bool is_known_algorithm(std::string_view name);

/// One optimization run, flattened for the per-run log.
struct RunRecord {
  std::string dataset;
  std::string algorithm;
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  double fitness = 0.0;
  double accuracy = 0.0;
  double error_rate = 0.0;
  std::size_t subset_size = 0;
  std::string mask;  ///< bitstring, bit 0 leftmost
  std::uint64_t evaluations = 0;
  std::uint64_t classifier_invocations = 0;
  double time_seconds = 0.0;
};

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation, 0 for a single run
  double best = 0.0;
  double worst = 0.0;
};

struct ReportRow {
  std::string dataset;
  std::string algorithm;
  MetricStats accuracy;      ///< best = max
  MetricStats subset_size;   ///< best = min
  MetricStats time_seconds;  ///< best = min
  std::size_t runs = 0;
};

struct ReportTable {
  std::vector<ReportRow> rows;
};

struct ExperimentResult {
  ReportTable table;
  std::vector<RunRecord> records;
  std::vector<std::string> diagnostics;  ///< skipped datasets etc.
};

/// Execute one (dataset, algorithm, seed) run: the seed derives the fold
/// shuffle first and the optimizer stream second, so a seed fully
/// reproduces the run. The dataset must already be normalized.
RunRecord execute_single_run(const Dataset& normalized, std::string_view algorithm,
                             std::uint64_t seed, const ExperimentConfig& cfg,
                             std::size_t run_index = 0);

/// Run the whole grid (datasets x algorithms x runs) with seeds
/// base_seed + run_index. A dataset that fails to load is reported in
/// diagnostics and skipped; everything else proceeds. Record order is
/// dataset-major, then algorithm, then run index, regardless of thread
/// count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Group records by (dataset, algorithm) in first-appearance order and
/// aggregate the three metrics.
ReportTable aggregate_records(std::span<const RunRecord> records);

/// Exhaustive enumeration of all 2^N - 1 non-empty masks; the exact
/// optimum of the wrapper objective. Guarded to N <= 15; throws
/// std::invalid_argument beyond that.
std::pair<FeatureMask, FitnessValue> oracle_search(const Dataset& ds,
                                                   const FoldPlan& plan,
                                                   FitnessWeights weights,
                                                   std::size_t k_neighbors);
std::pair<FeatureMask, FitnessValue> oracle_search(FitnessEvaluator& evaluator);

/// Write accuracy.csv / features.csv / time.csv (schema:
/// dataset,algorithm,mean,std,best,worst,runs), a combined results.md with
/// the best value per row in bold, and the machine-readable per-run log
/// runs.jsonl. Throws ConfigError on an empty table (nothing is written)
/// and DatasetError when the directory is not writable.
void emit_reports(const ReportTable& table, std::span<const RunRecord> records,
                  const std::filesystem::path& dir);

/// One canonical JSON line for the per-run log; identical runs serialize
/// byte-identically except for the trailing time field.
std::string to_json_line(const RunRecord& record);

/// Parse a runs.jsonl written by emit_reports. Throws ConfigError.
std::vector<RunRecord> load_run_log(const std::filesystem::path& path);

}  // namespace balo
