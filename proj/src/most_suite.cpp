#include "sing/most_suite.hpp"

#include <cmath>
#include <numbers>

namespace sing {

namespace {

constexpr double pi = std::numbers::pi;

TestFunction make_1d(std::string name, double lo, double hi, double (*f)(double)) {
  return TestFunction{std::move(name), [f](std::span<const double> x) { return f(x[0]); },
                      SearchDomain{{lo}, {hi}}, 200001};
}

}  // namespace

std::vector<TestFunction> one_dimensional_suite() {
  std::vector<TestFunction> suite;
  // Cosine ripples on a parabola; ten local minima, global at 1.43.
  suite.push_back(make_1d("ripple_parabola", 0.0, 2.5, [](double x) {
    const double u = x - 1.43;
    return u * u + 0.3 * (1.0 - std::cos(8.0 * pi * u));
  }));
  suite.push_back(make_1d("sine_pair", 2.7, 7.5, [](double x) {
    return std::sin(x) + std::sin(10.0 * x / 3.0);
  }));
  suite.push_back(make_1d("gramacy_lee", 0.5, 2.5, [](double x) {
    const double u = x - 1.0;
    return std::sin(10.0 * pi * x) / (2.0 * x) + u * u * u * u;
  }));
  suite.push_back(make_1d("tilted_double_well", -2.0, 2.0, [](double x) {
    const double u = x * x - 1.0;
    return u * u + 0.3 * x;
  }));
  suite.push_back(make_1d("damped_quadratic", 1.9, 3.9, [](double x) {
    return -(16.0 * x * x - 24.0 * x + 5.0) * std::exp(-x);
  }));
  return suite;
}

std::vector<TestFunction> separable_suite() {
  std::vector<TestFunction> suite;
  suite.push_back(TestFunction{"shifted_sphere_10d",
                               [](std::span<const double> x) {
                                 double s = 0.0;
                                 for (double v : x) s += (v - 0.5) * (v - 0.5);
                                 return s;
                               },
                               SearchDomain::cube(10, 0.0, 1.0), 5});
  suite.push_back(TestFunction{"rastrigin_2d",
                               [](std::span<const double> x) {
                                 double s = 10.0 * static_cast<double>(x.size());
                                 for (double v : x) {
                                   const double u = v - 0.7;
                                   s += u * u - 10.0 * std::cos(2.0 * pi * u);
                                 }
                                 return s;
                               },
                               SearchDomain::cube(2, -2.5, 2.5), 1001});
  suite.push_back(TestFunction{"styblinski_tang_3d",
                               [](std::span<const double> x) {
                                 double s = 0.0;
                                 for (double v : x) s += 0.5 * (v * v * v * v - 16.0 * v * v + 5.0 * v);
                                 return s;
                               },
                               SearchDomain::cube(3, -5.0, 5.0), 201});
  return suite;
}

SuiteOutcome run_suite_case(const TestFunction& fn, const MostConfig& config) {
  SuiteOutcome out;
  out.name = fn.name;
  out.dimension = fn.domain.size();
  out.report = optimize(fn.objective, fn.domain, config);
  out.oracle = grid_oracle(fn.objective, fn.domain, fn.oracle_points_per_axis);
  out.value_range = out.oracle.worst_value - out.oracle.best_value;
  out.allowed_excess = 1e-3 * out.value_range;
  out.within_oracle_bound = out.report.best_value <= out.oracle.best_value + out.allowed_excess;
  out.widths_converged = !out.report.hit_max_sweeps;
  for (std::size_t j = 0; j < out.dimension; ++j) {
    if (!(out.report.final_widths[j] < config.tolerance * fn.domain.width(j))) out.widths_converged = false;
  }
  return out;
}

}  // namespace sing
