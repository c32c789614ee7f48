#include "balo/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "balo/errors.hpp"

namespace balo {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_comma(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return cells;
}

bool parse_finite(std::string_view cell, double& out) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) {
    throw DatasetError("cannot open dataset file: " + path.string());
  }

  Dataset ds;
  ds.name = path.stem().string();

  std::unordered_map<std::string, int> class_index;
  std::string line;
  std::size_t line_no = 0;
  std::size_t n_cols = 0;
  bool header_pending = has_header;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }

    const auto cells = split_comma(text);
    if (n_cols == 0) {
      n_cols = cells.size();
      if (n_cols < 2) {
        throw DatasetError(path.string() + ":" + std::to_string(line_no) +
                           ": need at least one feature column plus a label column");
      }
      ds.n_features = n_cols - 1;
    } else if (cells.size() != n_cols) {
      throw DatasetError(path.string() + ":" + std::to_string(line_no) +
                         ": ragged row, expected " + std::to_string(n_cols) +
                         " columns, got " + std::to_string(cells.size()));
    }

    for (std::size_t j = 0; j + 1 < n_cols; ++j) {
      double value = 0.0;
      if (cells[j].empty()) {
        throw DatasetError(path.string() + ":" + std::to_string(line_no) +
                           ": missing value in feature column " + std::to_string(j + 1));
      }
      if (!parse_finite(cells[j], value)) {
        throw DatasetError(path.string() + ":" + std::to_string(line_no) +
                           ": non-numeric feature cell '" + std::string(cells[j]) +
                           "' in column " + std::to_string(j + 1));
      }
      ds.features.push_back(value);
    }

    const std::string_view label_cell = cells[n_cols - 1];
    if (label_cell.empty()) {
      throw DatasetError(path.string() + ":" + std::to_string(line_no) + ": empty class label");
    }
    const auto [it, inserted] = class_index.try_emplace(
        std::string(label_cell), static_cast<int>(class_index.size()));
    ds.labels.push_back(it->second);
  }

  ds.n_instances = ds.labels.size();
  if (ds.n_instances == 0) {
    throw DatasetError("no data rows in " + path.string());
  }
  ds.n_classes = class_index.size();
  if (ds.n_classes < 2) {
    throw DatasetError(path.string() + ": need at least two distinct classes");
  }
  return ds;
}

Dataset normalize_min_max(Dataset ds) {
  for (std::size_t j = 0; j < ds.n_features; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ds.n_instances; ++i) {
      const double v = ds.features[i * ds.n_features + j];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double range = hi - lo;
    for (std::size_t i = 0; i < ds.n_instances; ++i) {
      double& v = ds.features[i * ds.n_features + j];
      v = range > 0.0 ? (v - lo) / range : 0.0;
    }
  }
  return ds;
}

FoldPlan stratified_folds(const Dataset& ds, std::size_t k, RandomStream& rng) {
  if (k < 2) {
    throw std::invalid_argument("stratified_folds: k must be at least 2");
  }
  if (k > ds.n_instances) {
    throw std::invalid_argument("stratified_folds: k exceeds the instance count");
  }

  std::vector<std::vector<std::size_t>> by_class(ds.n_classes);
  for (std::size_t i = 0; i < ds.n_instances; ++i) {
    by_class[static_cast<std::size_t>(ds.labels[i])].push_back(i);
  }

  FoldPlan plan;
  plan.k = k;
  plan.folds.resize(k);

  // The cursor continues across classes so overall fold sizes stay balanced.
  std::size_t cursor = 0;
  for (auto& members : by_class) {
    shuffle(members, rng);
    for (const auto idx : members) {
      plan.folds[cursor % k].push_back(idx);
      ++cursor;
    }
  }
  for (auto& fold : plan.folds) {
    std::sort(fold.begin(), fold.end());
  }
  return plan;
}

}  // namespace balo
