#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace ridgelab {

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// A serializable experiment record. Reports carry no wall-clock fields;
/// identical inputs and seeds serialize to identical bytes.
struct ExperimentReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> inputs;  // key, value (insertion order)
  std::vector<ReportTable> tables;
  std::vector<std::pair<std::string, double>> scalars;  // fitted exponents, constants, ...
  std::string verdict = "inconclusive";                 // pass | inconclusive | fail
  std::vector<std::string> notes;

  void input(const std::string& key, const std::string& value) { inputs.emplace_back(key, value); }
  void scalar(const std::string& key, double value) { scalars.emplace_back(key, value); }
};

/// Shortest round-trip decimal form of a double ("%.17g" trimmed).
std::string format_double(double v);

/// Stable-key-order JSON, ending with a newline. The digest field is an
/// FNV-1a hash of inputs and experiment id.
std::string report_json(const ExperimentReport& report);

/// RFC-4180 CSV with one header row naming every column.
std::string table_csv(const ReportTable& table);

/// Writes <dir>/report.json plus one <dir>/<table-name>.csv per table.
/// Creates the directory. Returns the list of file paths written.
std::vector<std::filesystem::path> write_report(const ExperimentReport& report,
                                                const std::filesystem::path& dir);

}  // namespace ridgelab
