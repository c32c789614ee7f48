// Command-line front end: `run` executes a configured experiment or a
// single seeded run, `oracle` enumerates the exact optimum on small
// datasets, `report` re-aggregates a per-run log.
//
// Exit codes: 0 success, 1 configuration error, 2 dataset error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "balo/bench.hpp"
#include "balo/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitDataset = 2;

balo::Dataset load_normalized(const std::string& path, bool has_header) {
  return balo::normalize_min_max(balo::load_csv(path, has_header));
}

int run_single(const std::string& dataset_path, bool has_header,
               const std::string& algorithm, std::uint64_t seed,
               const balo::ExperimentConfig& params) {
  if (!balo::is_known_algorithm(algorithm)) {
    std::cerr << "error: unknown algorithm '" << algorithm << "'; known:";
    for (const auto& name : balo::known_algorithms()) std::cerr << ' ' << name;
    std::cerr << '\n';
    return kExitConfig;
  }
  const balo::Dataset ds = load_normalized(dataset_path, has_header);
  const balo::RunRecord record = balo::execute_single_run(ds, algorithm, seed, params);
  std::cout << balo::to_json_line(record) << '\n';
  return kExitOk;
}

int run_experiment_file(const std::string& config_path) {
  const balo::ExperimentConfig cfg = balo::load_experiment_config(config_path);
  const balo::ExperimentResult result = balo::run_experiment(cfg);
  for (const auto& diagnostic : result.diagnostics) {
    std::cerr << "warning: " << diagnostic << '\n';
  }
  if (result.records.empty()) {
    std::cerr << "error: no dataset produced any run\n";
    return kExitDataset;
  }
  balo::emit_reports(result.table, result.records, cfg.output_dir);
  std::cerr << "wrote " << result.records.size() << " run records to "
            << (cfg.output_dir / "runs.jsonl").string() << '\n';
  return kExitOk;
}

int run_oracle(const std::string& dataset_path, bool has_header, std::uint64_t seed,
               std::size_t k_cv, std::size_t k_neighbors, double alpha) {
  const balo::Dataset ds = load_normalized(dataset_path, has_header);
  balo::RandomStream root(seed);
  balo::RandomStream fold_rng = root.spawn();
  const balo::FoldPlan plan = balo::stratified_folds(ds, k_cv, fold_rng);
  const auto [mask, fitness] =
      balo::oracle_search(ds, plan, balo::FitnessWeights(alpha), k_neighbors);

  nlohmann::ordered_json out{
      {"dataset", ds.name},
      {"seed", seed},
      {"mask", mask.to_bits()},
      {"fitness", fitness.value},
      {"accuracy", 1.0 - fitness.error_rate},
      {"error_rate", fitness.error_rate},
      {"subset_size", fitness.subset_size},
      {"masks_evaluated", (std::uint64_t{1} << ds.n_features) - 1},
  };
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_report(const std::string& log_path, const std::string& out_dir) {
  const auto records = balo::load_run_log(log_path);
  if (records.empty()) {
    std::cerr << "error: run log is empty\n";
    return kExitConfig;
  }
  const balo::ReportTable table = balo::aggregate_records(records);
  balo::emit_reports(table, records, out_dir);
  std::cerr << "re-aggregated " << records.size() << " records into " << out_dir << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary ant lion optimizer wrapper feature selection toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "balo 0.1.0");

  // run
  auto* run_cmd = app.add_subcommand("run", "Run a full experiment or a single seeded run");
  std::string config_path;
  std::string dataset_path;
  std::string algorithm;
  std::uint64_t seed = 1;
  bool header = true;
  balo::ExperimentConfig params;
  run_cmd->add_option("--config", config_path, "Experiment config JSON (full experiment)");
  run_cmd->add_option("--dataset", dataset_path, "Dataset CSV (single run)");
  run_cmd->add_option("--algo", algorithm, "Algorithm name (single run)");
  run_cmd->add_option("--seed", seed, "Run seed (single run)");
  run_cmd->add_flag("--header,!--no-header", header, "First CSV row is a header (default on)");
  run_cmd->add_option("--population", params.population, "Population size");
  run_cmd->add_option("--iterations", params.iterations, "Iteration count");
  run_cmd->add_option("--k-cv", params.k_cv, "Cross-validation fold count");
  run_cmd->add_option("--k-neighbors", params.k_neighbors, "KNN neighbor count");
  run_cmd->add_option("--alpha", params.alpha, "Fitness weight on the error rate");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search (N <= 15)");
  std::string oracle_dataset;
  std::uint64_t oracle_seed = 1;
  std::size_t oracle_k_cv = 10;
  std::size_t oracle_k_neighbors = 5;
  double oracle_alpha = 0.99;
  bool oracle_header = true;
  oracle_cmd->add_option("--dataset", oracle_dataset, "Dataset CSV")->required();
  oracle_cmd->add_flag("--header,!--no-header", oracle_header, "First CSV row is a header");
  oracle_cmd->add_option("--seed", oracle_seed, "Fold-shuffle seed");
  oracle_cmd->add_option("--k-cv", oracle_k_cv, "Cross-validation fold count");
  oracle_cmd->add_option("--k-neighbors", oracle_k_neighbors, "KNN neighbor count");
  oracle_cmd->add_option("--alpha", oracle_alpha, "Fitness weight on the error rate");

  // report
  auto* report_cmd = app.add_subcommand("report", "Re-aggregate a per-run log");
  std::string log_path;
  std::string out_dir;
  report_cmd->add_option("--from", log_path, "runs.jsonl produced by `run`")->required();
  report_cmd->add_option("--out", out_dir, "Output directory (default: log's directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run_cmd->parsed()) {
      const bool single = !dataset_path.empty() || !algorithm.empty();
      if (!config_path.empty() && single) {
        std::cerr << "error: --config and --dataset/--algo are mutually exclusive\n";
        return kExitConfig;
      }
      if (!config_path.empty()) return run_experiment_file(config_path);
      if (dataset_path.empty() || algorithm.empty()) {
        std::cerr << "error: single-run mode needs both --dataset and --algo\n";
        return kExitConfig;
      }
      return run_single(dataset_path, header, algorithm, seed, params);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle(oracle_dataset, oracle_header, oracle_seed, oracle_k_cv,
                        oracle_k_neighbors, oracle_alpha);
    }
    if (report_cmd->parsed()) {
      if (out_dir.empty()) {
        out_dir = std::filesystem::path(log_path).parent_path().string();
        if (out_dir.empty()) out_dir = ".";
      }
      return run_report(log_path, out_dir);
    }
  } catch (const balo::DatasetError& e) {
    std::cerr << "dataset error: " << e.what() << '\n';
    return kExitDataset;
  } catch (const balo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
