#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "balo/dataset.hpp"
#include "balo/errors.hpp"
#include "support/test_util.hpp"

using namespace balo;
using testutil::write_temp_file;

TEST_SUITE("dataset") {

TEST_CASE("load_csv indexes labels by first appearance") {
  const auto path = write_temp_file("1,2,A\n3,4,B\n5,6,A\n", "load_basic.csv");
  const Dataset ds = load_csv(path, false);
  CHECK(ds.n_instances == 3);
  CHECK(ds.n_features == 2);
  CHECK(ds.n_classes == 2);
  CHECK(ds.labels == std::vector<int>{0, 1, 0});
  CHECK(ds.features == std::vector<double>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("load_csv skips a single header row and blank lines") {
  const auto path =
      write_temp_file("f1,f2,class\n\n1,2,x\n3,4,y\n\n", "load_header.csv");
  const Dataset ds = load_csv(path, true);
  CHECK(ds.n_instances == 2);
  CHECK(ds.labels == std::vector<int>{0, 1});
}

TEST_CASE("load_csv error paths") {
  CHECK_THROWS_AS(load_csv("/nonexistent/file.csv", false), DatasetError);

  const auto ragged = write_temp_file("1,2,A\n3,B\n", "load_ragged.csv");
  CHECK_THROWS_AS(load_csv(ragged, false), DatasetError);

  const auto non_numeric = write_temp_file("1,2,A\n1,x,A\n2,3,B\n", "load_nonnum.csv");
  CHECK_THROWS_AS(load_csv(non_numeric, false), DatasetError);

  const auto missing = write_temp_file("1,2,A\n1,,B\n", "load_missing.csv");
  CHECK_THROWS_AS(load_csv(missing, false), DatasetError);

  const auto question = write_temp_file("1,2,A\n1,?,B\n", "load_question.csv");
  CHECK_THROWS_AS(load_csv(question, false), DatasetError);

  const auto one_column = write_temp_file("A\nB\n", "load_onecol.csv");
  CHECK_THROWS_AS(load_csv(one_column, false), DatasetError);

  const auto one_class = write_temp_file("1,A\n2,A\n", "load_oneclass.csv");
  CHECK_THROWS_AS(load_csv(one_class, false), DatasetError);

  const auto empty = write_temp_file("", "load_empty.csv");
  CHECK_THROWS_AS(load_csv(empty, false), DatasetError);
}

TEST_CASE("normalize_min_max maps columns to [0,1]") {
  Dataset ds;
  ds.n_instances = 3;
  ds.n_features = 3;
  ds.n_classes = 2;
  // columns: [2,4,6], [5,5,5], [-1,0,3]
  ds.features = {2, 5, -1, 4, 5, 0, 6, 5, 3};
  ds.labels = {0, 1, 0};

  const Dataset out = normalize_min_max(ds);
  CHECK(out.features[0] == 0.0);
  CHECK(out.features[3] == 0.5);
  CHECK(out.features[6] == 1.0);
  // constant column collapses to zero
  CHECK(out.features[1] == 0.0);
  CHECK(out.features[4] == 0.0);
  CHECK(out.features[7] == 0.0);
  // (-1,0,3): (x+1)/4
  CHECK(out.features[2] == 0.0);
  CHECK(out.features[5] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(out.features[8] == 1.0);
}

TEST_CASE("normalization is idempotent") {
  RandomStream rng(404);
  const Dataset raw = testutil::make_cluster_dataset({9, 7}, 5, 3, 2.0, rng);
  const Dataset once = normalize_min_max(raw);
  const Dataset twice = normalize_min_max(once);
  CHECK(once.features == twice.features);
}

TEST_CASE("stratified_folds balances a perfectly divisible split") {
  Dataset ds;
  ds.n_instances = 10;
  ds.n_features = 1;
  ds.n_classes = 2;
  ds.features.assign(10, 0.0);
  ds.labels = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1};

  RandomStream rng(1);
  const FoldPlan plan = stratified_folds(ds, 5, rng);
  REQUIRE(plan.folds.size() == 5);
  for (const auto& fold : plan.folds) {
    REQUIRE(fold.size() == 2);
    int per_class[2] = {0, 0};
    for (const auto i : fold) ++per_class[ds.labels[i]];
    CHECK(per_class[0] == 1);
    CHECK(per_class[1] == 1);
  }
}

TEST_CASE("stratified_folds puts a singleton class in exactly one fold") {
  Dataset ds;
  ds.n_instances = 4;
  ds.n_features = 1;
  ds.n_classes = 2;
  ds.features.assign(4, 0.0);
  ds.labels = {0, 0, 0, 1};

  RandomStream rng(2);
  const FoldPlan plan = stratified_folds(ds, 2, rng);
  int folds_with_singleton = 0;
  for (const auto& fold : plan.folds) {
    for (const auto i : fold) {
      if (ds.labels[i] == 1) ++folds_with_singleton;
    }
  }
  CHECK(folds_with_singleton == 1);
}

TEST_CASE("stratified_folds guards") {
  Dataset ds;
  ds.n_instances = 3;
  ds.n_features = 1;
  ds.n_classes = 2;
  ds.features.assign(3, 0.0);
  ds.labels = {0, 1, 0};
  RandomStream rng(3);
  CHECK_THROWS_AS(stratified_folds(ds, 1, rng), std::invalid_argument);
  CHECK_THROWS_AS(stratified_folds(ds, 4, rng), std::invalid_argument);
}

TEST_CASE("partition and stratification properties on random datasets") {
  RandomStream rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t classes = 2 + rng.uniform_index(3);
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (std::size_t c = 0; c < classes; ++c) {
      sizes.push_back(1 + rng.uniform_index(30));
      total += sizes.back();
    }
    const Dataset ds = testutil::make_cluster_dataset(sizes, 3, 2, 1.0, rng);
    const std::size_t k = 2 + rng.uniform_index(std::min<std::size_t>(6, total - 1));

    const FoldPlan plan = stratified_folds(ds, k, rng);

    // exact partition
    std::set<std::size_t> seen;
    for (const auto& fold : plan.folds) {
      for (const auto i : fold) {
        CHECK(seen.insert(i).second);
        CHECK(i < ds.n_instances);
      }
    }
    CHECK(seen.size() == ds.n_instances);

    // per-class proportional share within one
    for (std::size_t c = 0; c < classes; ++c) {
      const double share = static_cast<double>(sizes[c]) / static_cast<double>(k);
      for (const auto& fold : plan.folds) {
        std::size_t count = 0;
        for (const auto i : fold) count += ds.labels[i] == static_cast<int>(c);
        CHECK(std::abs(static_cast<double>(count) - share) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("fold plans are seed-deterministic") {
  RandomStream rng(55);
  const Dataset ds = testutil::make_cluster_dataset({17, 13, 9}, 4, 2, 1.5, rng);
  RandomStream a(123);
  RandomStream b(123);
  const FoldPlan plan_a = stratified_folds(ds, 5, a);
  const FoldPlan plan_b = stratified_folds(ds, 5, b);
  CHECK(plan_a.folds == plan_b.folds);
  RandomStream c(124);
  const FoldPlan plan_c = stratified_folds(ds, 5, c);
  CHECK(plan_a.folds != plan_c.folds);
}

TEST_CASE("bundled Breastcancer file matches its published shape") {
  const Dataset ds = load_csv(testutil::data_dir() / "Breastcancer.csv", true);
  CHECK(ds.n_features == 9);
  CHECK(ds.n_instances == 699);
  CHECK(ds.n_classes == 2);

  RandomStream rng(9);
  const FoldPlan plan = stratified_folds(ds, 10, rng);
  for (const auto& fold : plan.folds) {
    CHECK(fold.size() >= 69);
    CHECK(fold.size() <= 70);
  }
}

}  // TEST_SUITE
