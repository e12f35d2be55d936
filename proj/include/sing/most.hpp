#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "sing/rng.hpp"

namespace sing {

using Objective = std::function<double(std::span<const double>)>;

// Axis-aligned box; lower[j] < upper[j] for every variable.
struct SearchDomain {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
  double width(std::size_t j) const { return upper[j] - lower[j]; }
  void validate() const;

  static SearchDomain cube(std::size_t n, double lo, double hi);
};

enum class Sampling {
  monte_carlo,  // uniform random points
  quadrature,   // fixed low-discrepancy lattice; no randomness
};

struct MostConfig {
  int initial_divisions = 20;
  int mc_samples = 50;
  // Relative: a variable has converged when its width drops below
  // tolerance * (its width in the original domain).
  double tolerance = 1e-6;
  int max_sweeps = 60;
  std::uint64_t seed = 0;
  bool use_initial_scan = true;
  Sampling sampling = Sampling::monte_carlo;

  void validate() const;
};

struct TraceEntry {
  int sweep = 0;
  std::size_t variable = 0;
  double lower = 0.0;  // interval before the split
  double upper = 0.0;
  double score_low = 0.0;
  double score_high = 0.0;
  int kept = 0;  // 0 = lower half, 1 = upper half
};

struct ScanRecord {
  std::size_t variable = 0;
  std::size_t selected = 0;
  double lower = 0.0;  // selected division
  double upper = 0.0;
  std::vector<double> scores;
};

struct OptimizeReport {
  std::vector<double> best_point;
  double best_value = 0.0;
  std::vector<double> final_widths;
  int sweeps_used = 0;
  bool hit_max_sweeps = false;
  std::size_t evaluations = 0;
  std::vector<ScanRecord> scans;
  std::vector<TraceEntry> region_trace;
};

// Mean of the objective over `samples` uniform points of the region.
// Throws NonFiniteObjective naming the offending point.
double mc_score(const Objective& objective, const SearchDomain& region, int samples, Rng& rng);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Splits variable j of the domain into initial_divisions parts and returns the
// part with the lowest score. Other variables are sampled over their full
// current intervals. Ties go to the lowest index.
Interval initial_scan(const Objective& objective, const SearchDomain& domain, const MostConfig& config,
                      std::size_t variable, ScanRecord* record = nullptr);

// Coordinate-wise region bisection. Never revisits a discarded half.
OptimizeReport optimize(const Objective& objective, const SearchDomain& domain, const MostConfig& config);

struct GridResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  double worst_value = 0.0;
  std::size_t evaluations = 0;
};

// Exhaustive lattice search including both domain ends on every axis.
// Throws ConfigError when points_per_axis^n exceeds the budget.
GridResult grid_oracle(const Objective& objective, const SearchDomain& domain, std::size_t points_per_axis,
                       std::size_t budget = 10'000'000);

// CSV: sweep,variable,lower,upper,score_low,score_high,kept
void write_trace_csv(std::ostream& out, const OptimizeReport& report);

}  // namespace sing
