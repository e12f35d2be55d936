#include "sing/cli/results.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "sing/error.hpp"
#include "sing/format.hpp"

namespace sing::cli {

namespace {

std::string csv_accuracy(const std::optional<double>& a) { return a ? format_real(*a) : std::string(); }

std::string percent(const std::optional<double>& a) {
  if (!a) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", *a * 100.0);
  return buf;
}

}  // namespace

void ResultsTable::validate() const {
  for (const auto& r : rows) {
    for (const auto& a : {r.teaching_accuracy, r.test_accuracy}) {
      if (a && !(*a >= 0.0 && *a <= 1.0)) {
        throw ConfigError("accuracy " + format_real(*a) + " outside [0, 1] for " + r.method);
      }
    }
  }
}

void write_csv(std::ostream& out, const ResultsTable& table) {
  table.validate();
  for (const auto& line : table.provenance) out << "# " << line << '\n';
  out << "method,seed,teaching_accuracy,test_accuracy,parameters\n";
  for (const auto& r : table.rows) {
    out << r.method << ',' << r.seed << ',' << csv_accuracy(r.teaching_accuracy) << ','
        << csv_accuracy(r.test_accuracy) << ',' << r.parameters << '\n';
  }
}

void write_text(std::ostream& out, const ResultsTable& table) {
  table.validate();
  for (const auto& line : table.provenance) out << "# " << line << '\n';
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"method", "seed", "teaching", "test", "parameters"});
  for (const auto& r : table.rows) {
    cells.push_back({r.method, r.seed, percent(r.teaching_accuracy), percent(r.test_accuracy), r.parameters});
  }
  write_aligned(out, cells);
}

void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

double median(std::vector<double> values) {
  if (values.empty()) throw ConfigError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace sing::cli
