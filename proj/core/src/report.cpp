#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "balo/bench.hpp"
#include "balo/errors.hpp"

namespace balo {
namespace {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DatasetError("cannot write report file: " + path.string());
  }
  return out;
}

void write_metric_csv(const std::filesystem::path& path, const ReportTable& table,
                      MetricStats ReportRow::* metric) {
  auto out = open_for_write(path);
  out << "dataset,algorithm,mean,std,best,worst,runs\n";
  for (const auto& row : table.rows) {
    const MetricStats& s = row.*metric;
    out << row.dataset << ',' << row.algorithm << ',' << format_number(s.mean) << ','
        << format_number(s.stddev) << ',' << format_number(s.best) << ','
        << format_number(s.worst) << ',' << row.runs << '\n';
  }
}

// datasets as rows, algorithms as columns, best cell per row in bold
void write_pivot(std::ofstream& out, const ReportTable& table,
                 MetricStats ReportRow::* metric, bool higher_is_better, int digits) {
  std::vector<std::string> datasets;
  std::vector<std::string> algorithms;
  for (const auto& row : table.rows) {
    if (std::find(datasets.begin(), datasets.end(), row.dataset) == datasets.end()) {
      datasets.push_back(row.dataset);
    }
    if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) ==
        algorithms.end()) {
      algorithms.push_back(row.algorithm);
    }
  }

  out << "| Dataset |";
  for (const auto& algorithm : algorithms) out << ' ' << algorithm << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < algorithms.size(); ++i) out << "---|";
  out << '\n';

  for (const auto& dataset : datasets) {
    std::vector<const ReportRow*> cells(algorithms.size(), nullptr);
    for (const auto& row : table.rows) {
      if (row.dataset != dataset) continue;
      const auto pos = std::find(algorithms.begin(), algorithms.end(), row.algorithm);
      cells[static_cast<std::size_t>(pos - algorithms.begin())] = &row;
    }

    const ReportRow* best = nullptr;
    for (const auto* cell : cells) {
      if (!cell) continue;
      if (!best || (higher_is_better ? (cell->*metric).mean > (best->*metric).mean
                                     : (cell->*metric).mean < (best->*metric).mean)) {
        best = cell;
      }
    }

    out << "| " << dataset << " |";
    for (const auto* cell : cells) {
      if (!cell) {
        out << " - |";
      } else if (cell == best) {
        out << " **" << format_fixed((cell->*metric).mean, digits) << "** |";
      } else {
        out << ' ' << format_fixed((cell->*metric).mean, digits) << " |";
      }
    }
    out << '\n';
  }
}

}  // namespace

std::string to_json_line(const RunRecord& record) {
  nlohmann::ordered_json line{
      {"dataset", record.dataset},
      {"algorithm", record.algorithm},
      {"run", record.run_index},
      {"seed", record.seed},
      {"fitness", record.fitness},
      {"accuracy", record.accuracy},
      {"error_rate", record.error_rate},
      {"subset_size", record.subset_size},
      {"mask", record.mask},
      {"evaluations", record.evaluations},
      {"classifier_invocations", record.classifier_invocations},
      {"time_seconds", record.time_seconds},
  };
  return line.dump();
}

std::vector<RunRecord> load_run_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open run log: " + path.string());
  }
  std::vector<RunRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
      throw ConfigError("malformed run log line " + std::to_string(line_no) + " in " +
                        path.string());
    }
    try {
      RunRecord record;
      record.dataset = parsed.at("dataset").get<std::string>();
      record.algorithm = parsed.at("algorithm").get<std::string>();
      record.run_index = parsed.at("run").get<std::size_t>();
      record.seed = parsed.at("seed").get<std::uint64_t>();
      record.fitness = parsed.at("fitness").get<double>();
      record.accuracy = parsed.at("accuracy").get<double>();
      record.error_rate = parsed.at("error_rate").get<double>();
      record.subset_size = parsed.at("subset_size").get<std::size_t>();
      record.mask = parsed.at("mask").get<std::string>();
      record.evaluations = parsed.at("evaluations").get<std::uint64_t>();
      record.classifier_invocations =
          parsed.at("classifier_invocations").get<std::uint64_t>();
      record.time_seconds = parsed.at("time_seconds").get<double>();
      records.push_back(std::move(record));
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("missing field in run log line " + std::to_string(line_no) +
                        " in " + path.string());
    }
  }
  return records;
}

void emit_reports(const ReportTable& table, std::span<const RunRecord> records,
                  const std::filesystem::path& dir) {
  if (table.rows.empty()) {
    throw ConfigError("emit_reports: empty report table");
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);

  write_metric_csv(dir / "accuracy.csv", table, &ReportRow::accuracy);
  write_metric_csv(dir / "features.csv", table, &ReportRow::subset_size);
  write_metric_csv(dir / "time.csv", table, &ReportRow::time_seconds);

  {
    auto out = open_for_write(dir / "results.md");
    out << "# Benchmark results\n\n";
    out << "Aggregates over " << table.rows.front().runs
        << " seeded runs per (dataset, algorithm) pair.\n\n";
    out << "## Average classification accuracy\n\n";
    write_pivot(out, table, &ReportRow::accuracy, true, 4);
    out << "\n## Average number of selected features\n\n";
    write_pivot(out, table, &ReportRow::subset_size, false, 2);
    out << "\n## Average computational time (seconds)\n\n";
    write_pivot(out, table, &ReportRow::time_seconds, false, 3);
  }

  {
    auto out = open_for_write(dir / "runs.jsonl");
    for (const auto& record : records) out << to_json_line(record) << '\n';
  }
}

}  // namespace balo
