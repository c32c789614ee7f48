#include "balo/bench.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "balo/errors.hpp"

namespace balo {
namespace {

using nlohmann::json;

json parse_json_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(std::string("cannot open ") + what + ": " + path.string());
  }
  json parsed = json::parse(in, nullptr, false);
  if (parsed.is_discarded()) {
    throw ConfigError(std::string("malformed JSON in ") + what + ": " + path.string());
  }
  return parsed;
}

struct AlgorithmSpec {
  enum class Kind { kAlo, kPso, kGsa } kind;
  TransferFunctionId transfer;
};

std::optional<AlgorithmSpec> parse_algorithm(std::string_view name) {
  using Kind = AlgorithmSpec::Kind;
  if (name.starts_with("alo-")) {
    const auto tf = parse_transfer(name.substr(4));
    if (tf && *tf != TransferFunctionId::S0 && *tf != TransferFunctionId::V0) {
      return AlgorithmSpec{Kind::kAlo, *tf};
    }
    return std::nullopt;
  }
  if (name == "balo1") return AlgorithmSpec{Kind::kAlo, TransferFunctionId::S0};
  if (name == "balo2") return AlgorithmSpec{Kind::kAlo, TransferFunctionId::V0};
  if (name == "bpso") return AlgorithmSpec{Kind::kPso, TransferFunctionId::S0};
  if (name == "bgsa") return AlgorithmSpec{Kind::kGsa, TransferFunctionId::V0};
  return std::nullopt;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.runs < 1) throw ConfigError("config: runs must be at least 1");
  if (cfg.population < 2) throw ConfigError("config: population must be at least 2");
  if (cfg.iterations < 1) throw ConfigError("config: iterations must be at least 1");
  if (cfg.k_cv < 2) throw ConfigError("config: k_cv must be at least 2");
  if (cfg.k_neighbors < 1) throw ConfigError("config: k_neighbors must be at least 1");
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
    throw ConfigError("config: alpha must lie in [0,1]");
  }
  if (cfg.algorithms.empty()) throw ConfigError("config: algorithm list is empty");
  for (const auto& name : cfg.algorithms) {
    if (!is_known_algorithm(name)) {
      throw ConfigError("config: unknown algorithm '" + name + "'");
    }
  }
}

}  // namespace

std::vector<DatasetEntry> load_manifest(const std::filesystem::path& path) {
  const json parsed = parse_json_file(path, "manifest");
  if (!parsed.is_object() || !parsed.contains("datasets") ||
      !parsed["datasets"].is_array()) {
    throw ConfigError("manifest: expected an object with a 'datasets' array: " +
                      path.string());
  }

  const auto base = path.parent_path();
  std::vector<DatasetEntry> entries;
  for (const auto& item : parsed["datasets"]) {
    if (!item.is_object() || !item.contains("name") || !item.contains("path")) {
      throw ConfigError("manifest: each dataset needs 'name' and 'path': " +
                        path.string());
    }
    DatasetEntry entry;
    entry.name = item["name"].get<std::string>();
    std::filesystem::path file = item["path"].get<std::string>();
    entry.path = file.is_absolute() ? file : base / file;
    entry.has_header = item.value("has_header", true);
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) {
    throw ConfigError("manifest: dataset list is empty: " + path.string());
  }
  return entries;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  const json parsed = parse_json_file(path, "experiment config");
  if (!parsed.is_object()) {
    throw ConfigError("config: expected a JSON object: " + path.string());
  }

  ExperimentConfig cfg;
  const auto base = path.parent_path();
  for (const auto& [key, value] : parsed.items()) {
    try {
      if (key == "manifest") {
        std::filesystem::path p = value.get<std::string>();
        cfg.manifest = p.is_absolute() ? p : base / p;
      } else if (key == "algorithms") {
        cfg.algorithms = value.get<std::vector<std::string>>();
      } else if (key == "runs") {
        cfg.runs = value.get<std::size_t>();
      } else if (key == "population") {
        cfg.population = value.get<std::size_t>();
      } else if (key == "iterations") {
        cfg.iterations = value.get<std::size_t>();
      } else if (key == "k_cv") {
        cfg.k_cv = value.get<std::size_t>();
      } else if (key == "k_neighbors") {
        cfg.k_neighbors = value.get<std::size_t>();
      } else if (key == "alpha") {
        cfg.alpha = value.get<double>();
      } else if (key == "base_seed") {
        cfg.base_seed = value.get<std::uint64_t>();
      } else if (key == "output_dir") {
        std::filesystem::path p = value.get<std::string>();
        cfg.output_dir = p.is_absolute() ? p : base / p;
      } else if (key == "threads") {
        cfg.threads = value.get<std::size_t>();
      } else {
        throw ConfigError("config: unknown key '" + key + "' in " + path.string());
      }
    } catch (const json::exception&) {
      throw ConfigError("config: bad value for key '" + key + "' in " + path.string());
    }
  }
  if (cfg.manifest.empty()) {
    throw ConfigError("config: 'manifest' is required: " + path.string());
  }
  validate_config(cfg);
  return cfg;
}

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{
      "alo-s1", "alo-s2", "alo-s3", "alo-v1", "alo-v2",
      "alo-v3", "balo1",  "balo2",  "bpso",   "bgsa",
  };
  return names;
}

bool is_known_algorithm(std::string_view name) {
  return parse_algorithm(name).has_value();
}

RunRecord execute_single_run(const Dataset& normalized, std::string_view algorithm,
                             std::uint64_t seed, const ExperimentConfig& cfg,
                             std::size_t run_index) {
  const auto spec = parse_algorithm(algorithm);
  if (!spec) {
    throw ConfigError("unknown algorithm '" + std::string(algorithm) + "'");
  }

  RandomStream root(seed);
  RandomStream fold_rng = root.spawn();
  RandomStream algo_rng = root.spawn();
  const FoldPlan plan = stratified_folds(normalized, cfg.k_cv, fold_rng);

  OptimizerConfig ocfg;
  ocfg.population = cfg.population;
  ocfg.iterations = cfg.iterations;
  ocfg.transfer = spec->transfer;
  ocfg.weights = FitnessWeights(cfg.alpha);
  ocfg.k_neighbors = cfg.k_neighbors;

  RunResult run;
  switch (spec->kind) {
    case AlgorithmSpec::Kind::kAlo:
      run = run_alo(ocfg, normalized, plan, algo_rng);
      break;
    case AlgorithmSpec::Kind::kPso:
      run = run_bpso(PsoConfig{}, ocfg, normalized, plan, algo_rng);
      break;
    case AlgorithmSpec::Kind::kGsa:
      run = run_bgsa(GsaConfig{}, ocfg, normalized, plan, algo_rng);
      break;
  }

  RunRecord record;
  record.dataset = normalized.name;
  record.algorithm = std::string(algorithm);
  record.run_index = run_index;
  record.seed = seed;
  record.fitness = run.best_fitness.value;
  record.accuracy = run.accuracy;
  record.error_rate = run.best_fitness.error_rate;
  record.subset_size = run.subset_size;
  record.mask = run.best_mask.to_bits();
  record.evaluations = run.evaluations;
  record.classifier_invocations = run.classifier_invocations;
  record.time_seconds = run.elapsed_seconds;
  return record;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const auto entries = load_manifest(cfg.manifest);

  ExperimentResult result;
  std::vector<Dataset> datasets;
  datasets.reserve(entries.size());
  for (const auto& entry : entries) {
    try {
      Dataset ds = normalize_min_max(load_csv(entry.path, entry.has_header));
      ds.name = entry.name;
      if (ds.n_instances < cfg.k_cv) {
        throw DatasetError(entry.name + ": fewer instances than CV folds");
      }
      datasets.push_back(std::move(ds));
    } catch (const DatasetError& err) {
      result.diagnostics.push_back("skipping dataset '" + entry.name + "': " + err.what());
    }
  }

  struct Task {
    const Dataset* ds;
    const std::string* algorithm;
    std::size_t run_index;
  };
  std::vector<Task> tasks;
  tasks.reserve(datasets.size() * cfg.algorithms.size() * cfg.runs);
  for (const auto& ds : datasets) {
    for (const auto& algorithm : cfg.algorithms) {
      for (std::size_t r = 0; r < cfg.runs; ++r) {
        tasks.push_back(Task{&ds, &algorithm, r});
      }
    }
  }

  result.records.resize(tasks.size());
  const std::size_t workers = std::max<std::size_t>(1, cfg.threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      const Task& task = tasks[i];
      result.records[i] =
          execute_single_run(*task.ds, *task.algorithm, cfg.base_seed + task.run_index,
                             cfg, task.run_index);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.table = aggregate_records(result.records);
  return result;
}

ReportTable aggregate_records(std::span<const RunRecord> records) {
  struct Group {
    std::string dataset;
    std::string algorithm;
    std::vector<double> accuracy;
    std::vector<double> subset_size;
    std::vector<double> time_seconds;
  };
  std::vector<Group> groups;
  for (const auto& record : records) {
    Group* group = nullptr;
    for (auto& g : groups) {
      if (g.dataset == record.dataset && g.algorithm == record.algorithm) {
        group = &g;
        break;
      }
    }
    if (!group) {
      groups.push_back(Group{record.dataset, record.algorithm, {}, {}, {}});
      group = &groups.back();
    }
    group->accuracy.push_back(record.accuracy);
    group->subset_size.push_back(static_cast<double>(record.subset_size));
    group->time_seconds.push_back(record.time_seconds);
  }

  // Welford accumulation; the run log offers an independent recompute path.
  const auto stats = [](const std::vector<double>& xs, bool higher_is_better) {
    MetricStats s;
    double mean = 0.0;
    double m2 = 0.0;
    double lo = xs.front();
    double hi = xs.front();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double delta = xs[i] - mean;
      mean += delta / static_cast<double>(i + 1);
      m2 += delta * (xs[i] - mean);
      lo = std::min(lo, xs[i]);
      hi = std::max(hi, xs[i]);
    }
    s.mean = mean;
    s.stddev = xs.size() > 1 ? std::sqrt(m2 / static_cast<double>(xs.size() - 1)) : 0.0;
    s.best = higher_is_better ? hi : lo;
    s.worst = higher_is_better ? lo : hi;
    return s;
  };

  ReportTable table;
  table.rows.reserve(groups.size());
  for (const auto& group : groups) {
    ReportRow row;
    row.dataset = group.dataset;
    row.algorithm = group.algorithm;
    row.accuracy = stats(group.accuracy, true);
    row.subset_size = stats(group.subset_size, false);
    row.time_seconds = stats(group.time_seconds, false);
    row.runs = group.accuracy.size();
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::pair<FeatureMask, FitnessValue> oracle_search(FitnessEvaluator& evaluator) {
  const std::size_t n_features = evaluator.dataset().n_features;
  if (n_features > 15) {
    throw std::invalid_argument(
        "oracle_search: feature count exceeds the exhaustive-search guard (15)");
  }
  const std::uint32_t limit = std::uint32_t{1} << n_features;
  FeatureMask best_mask;
  FitnessValue best;
  best.value = 2.0;  // above any attainable fitness
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    FeatureMask mask(n_features);
    for (std::size_t d = 0; d < n_features; ++d) {
      if ((bits >> d) & 1u) mask.set(d, true);
    }
    const FitnessValue value = evaluator(mask);
    if (value.value < best.value) {
      best = value;
      best_mask = mask;
    }
  }
  return {best_mask, best};
}

std::pair<FeatureMask, FitnessValue> oracle_search(const Dataset& ds, const FoldPlan& plan,
                                                   FitnessWeights weights,
                                                   std::size_t k_neighbors) {
  FitnessEvaluator evaluator(ds, plan, weights, k_neighbors);
  return oracle_search(evaluator);
}

}  // namespace balo
