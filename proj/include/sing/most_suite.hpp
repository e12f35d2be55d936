#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sing/most.hpp"

namespace sing {

// Multimodal and separable test objectives with lattice-oracle ground truth.
struct TestFunction {
  std::string name;
  Objective objective;
  SearchDomain domain;
  std::size_t oracle_points_per_axis = 0;
};

std::vector<TestFunction> one_dimensional_suite();
std::vector<TestFunction> separable_suite();

struct SuiteOutcome {
  std::string name;
  std::size_t dimension = 0;
  OptimizeReport report;
  GridResult oracle;
  double value_range = 0.0;      // oracle worst - oracle best
  double allowed_excess = 0.0;   // 1e-3 * value_range
  bool within_oracle_bound = false;
  bool widths_converged = false;  // every final width < tolerance * domain width
};

SuiteOutcome run_suite_case(const TestFunction& fn, const MostConfig& config);

}  // namespace sing
