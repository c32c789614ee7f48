#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "balo/bench.hpp"
#include "balo/errors.hpp"
#include "support/test_util.hpp"

using namespace balo;
namespace fs = std::filesystem;

namespace {

// two tiny linearly-structured datasets, written once per process
struct BenchFixture {
  fs::path dir;
  fs::path manifest;

  BenchFixture() {
    dir = fs::temp_directory_path() / "balo_bench_fixture";
    fs::create_directories(dir);
    write_dataset(dir / "alpha.csv", 24, 4, 3001);
    write_dataset(dir / "beta.csv", 20, 5, 3002);
    manifest = dir / "manifest.json";
    std::ofstream out(manifest);
    out << R"({"datasets": [
      {"name": "alpha", "path": "alpha.csv", "has_header": true},
      {"name": "beta", "path": "beta.csv", "has_header": true}
    ]})";
  }

  static void write_dataset(const fs::path& path, std::size_t n, std::size_t features,
                            std::uint64_t seed) {
    RandomStream rng(seed);
    std::ofstream out(path);
    for (std::size_t j = 0; j < features; ++j) out << 'f' << j << ',';
    out << "class\n";
    for (std::size_t i = 0; i < n; ++i) {
      const int label = i % 2;
      for (std::size_t j = 0; j < features; ++j) {
        const double value = j == 0 ? label + 0.2 * rng.uniform01() : rng.uniform01();
        out << value << ',';
      }
      out << (label == 0 ? "neg" : "pos") << '\n';
    }
  }

  ExperimentConfig tiny_config() const {
    ExperimentConfig cfg;
    cfg.manifest = manifest;
    cfg.algorithms = {"alo-v3", "balo1", "bpso"};
    cfg.runs = 20;
    cfg.population = 4;
    cfg.iterations = 5;
    cfg.k_cv = 4;
    cfg.k_neighbors = 3;
    cfg.base_seed = 100;
    cfg.output_dir = dir / "out";
    return cfg;
  }
};

const BenchFixture& fixture() {
  static BenchFixture fx;
  return fx;
}

std::string line_without_time(const RunRecord& record) {
  RunRecord copy = record;
  copy.time_seconds = 0.0;
  return to_json_line(copy);
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("manifest loading and errors") {
  const auto entries = load_manifest(fixture().manifest);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "alpha");
  CHECK(entries[0].path == fixture().dir / "alpha.csv");
  CHECK(entries[0].has_header);

  CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.json"), ConfigError);
  const auto bad_json = testutil::write_temp_file("{not json", "bad_manifest.json");
  CHECK_THROWS_AS(load_manifest(bad_json), ConfigError);
  const auto no_fields =
      testutil::write_temp_file(R"({"datasets": [{"name": "x"}]})", "nofields.json");
  CHECK_THROWS_AS(load_manifest(no_fields), ConfigError);
}

TEST_CASE("experiment config defaults track the reference parameter table") {
  const auto path = testutil::write_temp_file(
      R"({"manifest": "m.json", "algorithms": ["alo-v3"]})", "cfg_defaults.json");
  const ExperimentConfig cfg = load_experiment_config(path);
  CHECK(cfg.runs == 20);
  CHECK(cfg.population == 8);
  CHECK(cfg.iterations == 70);
  CHECK(cfg.k_cv == 10);
  CHECK(cfg.k_neighbors == 5);
  CHECK(cfg.alpha == 0.99);
  CHECK(cfg.threads == 1);
}

TEST_CASE("experiment config rejects unknown keys, algorithms and bad values") {
  const auto unknown = testutil::write_temp_file(
      R"({"manifest": "m.json", "algorithms": ["alo-v3"], "k_neighbours": 5})",
      "cfg_unknown.json");
  CHECK_THROWS_AS(load_experiment_config(unknown), ConfigError);

  const auto bad_algo = testutil::write_temp_file(
      R"({"manifest": "m.json", "algorithms": ["alo-v9"]})", "cfg_badalgo.json");
  CHECK_THROWS_AS(load_experiment_config(bad_algo), ConfigError);

  const auto bad_alpha = testutil::write_temp_file(
      R"({"manifest": "m.json", "algorithms": ["alo-v3"], "alpha": 1.5})",
      "cfg_badalpha.json");
  CHECK_THROWS_AS(load_experiment_config(bad_alpha), ConfigError);
}

TEST_CASE("algorithm registry") {
  CHECK(known_algorithms().size() == 10);
  for (const auto& name : known_algorithms()) CHECK(is_known_algorithm(name));
  CHECK_FALSE(is_known_algorithm("alo-s0"));  // the legacy pair is balo1/balo2
  CHECK_FALSE(is_known_algorithm("alo-v0"));
  CHECK_FALSE(is_known_algorithm("pso"));
}

TEST_CASE("run_experiment produces the full record grid") {
  const ExperimentConfig cfg = fixture().tiny_config();
  const ExperimentResult result = run_experiment(cfg);
  CHECK(result.diagnostics.empty());
  CHECK(result.records.size() == 2 * 3 * 20);
  CHECK(result.table.rows.size() == 2 * 3);
  for (const auto& row : result.table.rows) {
    CHECK(row.runs == 20);
    CHECK(row.accuracy.mean >= 0.0);
    CHECK(row.accuracy.mean <= 1.0);
    CHECK(row.subset_size.mean >= 0.0);
  }
  // seeds: base_seed + run index, recorded per run
  CHECK(result.records[0].seed == 100);
  CHECK(result.records[19].seed == 119);
}

TEST_CASE("run_experiment is deterministic apart from timing") {
  ExperimentConfig cfg = fixture().tiny_config();
  cfg.runs = 4;
  const ExperimentResult a = run_experiment(cfg);
  cfg.threads = 2;  // thread count must not change any record
  const ExperimentResult b = run_experiment(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(line_without_time(a.records[i]) == line_without_time(b.records[i]));
  }
}

TEST_CASE("a missing dataset is skipped with a diagnostic") {
  const auto manifest = testutil::write_temp_file(
      R"({"datasets": [
        {"name": "ghost", "path": "/nonexistent/ghost.csv", "has_header": false},
        {"name": "alpha", "path": ")" + (fixture().dir / "alpha.csv").string() + R"("}
      ]})",
      "manifest_ghost.json");
  ExperimentConfig cfg = fixture().tiny_config();
  cfg.manifest = manifest;
  cfg.runs = 2;
  const ExperimentResult result = run_experiment(cfg);
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].find("ghost") != std::string::npos);
  CHECK(result.records.size() == 3 * 2);  // only alpha ran
}

TEST_CASE("single-run records reproduce exactly from their seed") {
  const Dataset ds =
      normalize_min_max(load_csv(fixture().dir / "alpha.csv", true));
  ExperimentConfig cfg = fixture().tiny_config();
  const RunRecord a = execute_single_run(ds, "alo-v3", 4242, cfg);
  const RunRecord b = execute_single_run(ds, "alo-v3", 4242, cfg);
  CHECK(a.seed == 4242);
  CHECK(line_without_time(a) == line_without_time(b));
  CHECK_THROWS_AS(execute_single_run(ds, "nope", 1, cfg), ConfigError);
}

TEST_CASE("aggregates match an independent two-pass recomputation") {
  ExperimentConfig cfg = fixture().tiny_config();
  cfg.runs = 6;
  const ExperimentResult result = run_experiment(cfg);
  for (const auto& row : result.table.rows) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& record : result.records) {
      if (record.dataset == row.dataset && record.algorithm == row.algorithm) {
        sum += record.accuracy;
        ++n;
      }
    }
    REQUIRE(n == row.runs);
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& record : result.records) {
      if (record.dataset == row.dataset && record.algorithm == row.algorithm) {
        ss += (record.accuracy - mean) * (record.accuracy - mean);
      }
    }
    const double stddev = std::sqrt(ss / static_cast<double>(n - 1));
    CHECK(row.accuracy.mean == doctest::Approx(mean).epsilon(1e-12));
    CHECK(row.accuracy.stddev == doctest::Approx(stddev).epsilon(1e-12));
  }
}

TEST_CASE("emit_reports writes the declared files and schema") {
  ExperimentConfig cfg = fixture().tiny_config();
  cfg.runs = 3;
  const ExperimentResult result = run_experiment(cfg);
  const fs::path out = fs::temp_directory_path() / "balo_reports_out";
  fs::remove_all(out);
  emit_reports(result.table, result.records, out);

  for (const auto* name : {"accuracy.csv", "features.csv", "time.csv", "results.md",
                           "runs.jsonl"}) {
    CHECK(fs::exists(out / name));
  }
  std::ifstream acc(out / "accuracy.csv");
  std::string header;
  std::getline(acc, header);
  CHECK(header == "dataset,algorithm,mean,std,best,worst,runs");

  std::ifstream md(out / "results.md");
  std::stringstream buffer;
  buffer << md.rdbuf();
  CHECK(buffer.str().find("**") != std::string::npos);

  // the per-run log round-trips
  const auto loaded = load_run_log(out / "runs.jsonl");
  REQUIRE(loaded.size() == result.records.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(to_json_line(loaded[i]) == to_json_line(result.records[i]));
  }

  // re-aggregating the log reproduces the table
  const ReportTable again = aggregate_records(loaded);
  REQUIRE(again.rows.size() == result.table.rows.size());
  for (std::size_t i = 0; i < again.rows.size(); ++i) {
    CHECK(again.rows[i].accuracy.mean == result.table.rows[i].accuracy.mean);
    CHECK(again.rows[i].subset_size.stddev == result.table.rows[i].subset_size.stddev);
  }
}

TEST_CASE("emit_reports refuses an empty table") {
  const fs::path out = fs::temp_directory_path() / "balo_reports_empty";
  fs::remove_all(out);
  CHECK_THROWS_AS(emit_reports(ReportTable{}, {}, out), ConfigError);
  CHECK_FALSE(fs::exists(out / "accuracy.csv"));
}

TEST_CASE("mask bitstring convention: bit 0 leftmost") {
  FeatureMask mask(4);
  mask.set(0, true);
  mask.set(2, true);
  CHECK(mask.to_bits() == "1010");
  CHECK(FeatureMask::from_bits("1010") == mask);
  CHECK_THROWS_AS(FeatureMask::from_bits("10x0"), std::invalid_argument);
}

TEST_CASE("oracle_search: degenerate single feature") {
  Dataset ds;
  ds.n_instances = 6;
  ds.n_features = 1;
  ds.n_classes = 2;
  ds.features = {0.0, 0.1, 0.2, 0.9, 1.0, 0.8};
  ds.labels = {0, 0, 0, 1, 1, 1};
  FoldPlan plan;
  plan.k = 2;
  plan.folds = {{0, 3, 4}, {1, 2, 5}};
  const auto [mask, best] = oracle_search(ds, plan, FitnessWeights(0.99), 1);
  CHECK(mask.to_bits() == "1");
  CHECK(best.subset_size == 1);
}

TEST_CASE("oracle_search dominates sampled masks and guards width") {
  RandomStream rng(71);
  const Dataset ds =
      normalize_min_max(testutil::make_cluster_dataset({18, 14}, 8, 3, 1.4, rng));
  RandomStream fold_rng(72);
  const FoldPlan plan = stratified_folds(ds, 4, fold_rng);
  const FitnessWeights weights(0.99);
  const auto [mask, best] = oracle_search(ds, plan, weights, 3);

  for (int trial = 0; trial < 50; ++trial) {
    const FeatureMask sample = testutil::random_nonempty_mask(8, rng);
    CHECK(evaluate_fitness(sample, ds, plan, weights, 3).value >= best.value - 1e-15);
  }

  Dataset wide;
  wide.n_instances = 4;
  wide.n_features = 16;
  wide.n_classes = 2;
  wide.features.assign(4 * 16, 0.0);
  wide.labels = {0, 1, 0, 1};
  FoldPlan tiny;
  tiny.k = 2;
  tiny.folds = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(oracle_search(wide, tiny, weights, 1), std::invalid_argument);
}

}  // TEST_SUITE
