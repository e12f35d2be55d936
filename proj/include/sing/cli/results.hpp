#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sing::cli {

struct ResultRow {
  std::string method;
  std::string seed;  // a seed number, "median", or "published"
  std::optional<double> teaching_accuracy;
  std::optional<double> test_accuracy;
  std::string parameters;  // fitted values, ';' separated
};

// Accuracy table. Run time is deliberately absent so that identical runs
// produce identical files.
struct ResultsTable {
  std::vector<std::string> provenance;  // "key=value" lines written as the header
  std::vector<ResultRow> rows;

  // Throws ConfigError when an accuracy lies outside [0, 1].
  void validate() const;
};

// Header lines start with '#', then one CSV row per result.
void write_csv(std::ostream& out, const ResultsTable& table);

// Same content as aligned columns, accuracies in percent.
void write_text(std::ostream& out, const ResultsTable& table);

// Rows of cells as space-padded columns; the last column is left ragged.
void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& cells);

double median(std::vector<double> values);

}  // namespace sing::cli
