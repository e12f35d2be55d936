#include "sing/most.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "sing/error.hpp"
#include "sing/format.hpp"

namespace sing {

void SearchDomain::validate() const {
  if (lower.empty()) throw ConfigError("search domain has no variables");
  if (lower.size() != upper.size()) throw ConfigError("search domain bounds differ in length");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]) || !(lower[j] < upper[j])) {
      throw ConfigError("search domain variable " + std::to_string(j) + " is degenerate: [" +
                        format_real(lower[j]) + ", " + format_real(upper[j]) + "]");
    }
  }
}

SearchDomain SearchDomain::cube(std::size_t n, double lo, double hi) {
  return SearchDomain{std::vector<double>(n, lo), std::vector<double>(n, hi)};
}

void MostConfig::validate() const {
  if (initial_divisions < 1) throw ConfigError("initial_divisions must be >= 1");
  if (mc_samples < 1) throw ConfigError("mc_samples must be >= 1");
  if (!(tolerance > 0.0) || !(tolerance < 1.0)) throw ConfigError("tolerance must lie in (0, 1)");
  if (max_sweeps < 0) throw ConfigError("max_sweeps must be >= 0");
}

namespace {

enum Phase : std::uint64_t { kScan = 1, kBisect = 2 };

double checked_call(const Objective& objective, std::span<const double> point) {
  const double v = objective(point);
  if (!std::isfinite(v)) {
    throw NonFiniteObjective("objective returned " + format_real(v) + " at (" + join_reals(point, ", ") + ")");
  }
  return v;
}

// Kronecker offsets for the deterministic lattice; first axis uses the plain
// midpoint rule.
double lattice_alpha(std::size_t j) {
  static constexpr double primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  const double p = primes[j % std::size(primes)] + 58.0 * static_cast<double>(j / std::size(primes));
  const double s = std::sqrt(p);
  return s - std::floor(s);
}

double quadrature_score(const Objective& objective, const SearchDomain& region, int samples) {
  const std::size_t n = region.size();
  std::vector<double> point(n);
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double centre = static_cast<double>(i) + 0.5;
    for (std::size_t j = 0; j < n; ++j) {
      double u = (j == 0) ? centre / samples : centre * lattice_alpha(j);
      u -= std::floor(u);
      point[j] = region.lower[j] + u * region.width(j);
    }
    sum += checked_call(objective, point);
  }
  return sum / samples;
}

double region_score(const Objective& objective, const SearchDomain& region, const MostConfig& config,
                    std::uint64_t stream) {
  if (config.sampling == Sampling::quadrature) return quadrature_score(objective, region, config.mc_samples);
  Rng rng(stream);
  return mc_score(objective, region, config.mc_samples, rng);
}

// Current box kept as (lower, width) so that halving the width is exact.
struct Box {
  std::vector<double> lower;
  std::vector<double> width;

  SearchDomain domain() const {
    SearchDomain d{lower, lower};
    for (std::size_t j = 0; j < lower.size(); ++j) d.upper[j] = lower[j] + width[j];
    return d;
  }
};

}  // namespace

double mc_score(const Objective& objective, const SearchDomain& region, int samples, Rng& rng) {
  if (samples < 1) throw ConfigError("mc_score needs at least one sample");
  const std::size_t n = region.size();
  std::vector<double> point(n);
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (std::size_t j = 0; j < n; ++j) point[j] = region.lower[j] + rng.uniform_open() * region.width(j);
    sum += checked_call(objective, point);
  }
  return sum / samples;
}

Interval initial_scan(const Objective& objective, const SearchDomain& domain, const MostConfig& config,
                      std::size_t variable, ScanRecord* record) {
  domain.validate();
  config.validate();
  if (variable >= domain.size()) throw ConfigError("initial_scan variable out of range");

  const int parts = config.initial_divisions;
  const double part_width = domain.width(variable) / parts;
  SearchDomain region = domain;
  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  std::vector<double> scores;
  for (int p = 0; p < parts; ++p) {
    region.lower[variable] = domain.lower[variable] + p * part_width;
    region.upper[variable] = region.lower[variable] + part_width;
    const double s = region_score(objective, region, config,
                                  derive_seed(config.seed, {kScan, variable, static_cast<std::uint64_t>(p)}));
    scores.push_back(s);
    if (s < best_score) {
      best_score = s;
      best = static_cast<std::size_t>(p);
    }
  }
  Interval chosen{domain.lower[variable] + static_cast<double>(best) * part_width, 0.0};
  chosen.upper = chosen.lower + part_width;
  if (record) *record = ScanRecord{variable, best, chosen.lower, chosen.upper, std::move(scores)};
  return chosen;
}

OptimizeReport optimize(const Objective& objective, const SearchDomain& domain, const MostConfig& config) {
  domain.validate();
  config.validate();
  const std::size_t n = domain.size();

  std::size_t calls = 0;
  Objective counted = [&](std::span<const double> x) {
    ++calls;
    return objective(x);
  };

  OptimizeReport report;
  Box box{domain.lower, std::vector<double>(n)};
  std::vector<double> threshold(n);
  for (std::size_t j = 0; j < n; ++j) {
    box.width[j] = domain.width(j);
    threshold[j] = config.tolerance * domain.width(j);
  }

  if (config.use_initial_scan && config.initial_divisions > 1) {
    for (std::size_t j = 0; j < n; ++j) {
      ScanRecord record;
      Interval chosen = initial_scan(counted, box.domain(), config, j, &record);
      box.lower[j] = chosen.lower;
      box.width[j] = box.width[j] / config.initial_divisions;
      report.scans.push_back(std::move(record));
    }
  }

  auto converged = [&] {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(box.width[j] < threshold[j])) return false;
    }
    return true;
  };

  int sweep = 0;
  while (!converged() && sweep < config.max_sweeps) {
    ++sweep;
    for (std::size_t j = 0; j < n; ++j) {
      if (box.width[j] < threshold[j]) continue;
      const double half = box.width[j] * 0.5;
      SearchDomain region = box.domain();
      const double parent_lower = region.lower[j];
      const double parent_upper = region.upper[j];
      const double mid = box.lower[j] + half;

      region.upper[j] = mid;
      const double low = region_score(counted, region, config,
                                      derive_seed(config.seed, {kBisect, static_cast<std::uint64_t>(sweep), j, 0}));
      region.lower[j] = mid;
      region.upper[j] = mid + half;
      const double high = region_score(counted, region, config,
                                       derive_seed(config.seed, {kBisect, static_cast<std::uint64_t>(sweep), j, 1}));

      const int kept = (low <= high) ? 0 : 1;
      if (kept == 1) box.lower[j] = mid;
      box.width[j] = half;
      report.region_trace.push_back(TraceEntry{sweep, j, parent_lower, parent_upper, low, high, kept});
    }
  }

  report.sweeps_used = sweep;
  report.hit_max_sweeps = !converged();
  report.final_widths = box.width;
  report.best_point.resize(n);
  for (std::size_t j = 0; j < n; ++j) report.best_point[j] = box.lower[j] + box.width[j] * 0.5;
  report.best_value = checked_call(counted, report.best_point);
  report.evaluations = calls;
  return report;
}

GridResult grid_oracle(const Objective& objective, const SearchDomain& domain, std::size_t points_per_axis,
                       std::size_t budget) {
  domain.validate();
  if (points_per_axis < 1) throw ConfigError("grid_oracle needs at least one point per axis");
  const std::size_t n = domain.size();
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > budget / points_per_axis) {
      throw ConfigError("grid_oracle budget exceeded: " + std::to_string(points_per_axis) + "^" +
                        std::to_string(n) + " points > " + std::to_string(budget));
    }
    total *= points_per_axis;
  }

  auto coordinate = [&](std::size_t j, std::size_t i) {
    if (points_per_axis == 1) return domain.lower[j] + domain.width(j) * 0.5;
    return domain.lower[j] + domain.width(j) * static_cast<double>(i) / static_cast<double>(points_per_axis - 1);
  };

  GridResult out;
  out.best_value = std::numeric_limits<double>::infinity();
  out.worst_value = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> point(n);
  for (std::size_t count = 0; count < total; ++count) {
    for (std::size_t j = 0; j < n; ++j) point[j] = coordinate(j, idx[j]);
    const double v = checked_call(objective, point);
    if (v < out.best_value) {
      out.best_value = v;
      out.best_point = point;
    }
    if (v > out.worst_value) out.worst_value = v;
    for (std::size_t j = 0; j < n; ++j) {
      if (++idx[j] < points_per_axis) break;
      idx[j] = 0;
    }
  }
  out.evaluations = total;
  return out;
}

void write_trace_csv(std::ostream& out, const OptimizeReport& report) {
  out << "sweep,variable,lower,upper,score_low,score_high,kept\n";
  for (const auto& e : report.region_trace) {
    out << e.sweep << ',' << e.variable << ',' << format_real(e.lower) << ',' << format_real(e.upper) << ','
        << format_real(e.score_low) << ',' << format_real(e.score_high) << ',' << (e.kept ? "upper" : "lower")
        << '\n';
  }
}

}  // namespace sing
