#include "sing/mlp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "sing/error.hpp"
#include "sing/format.hpp"

namespace sing {

void MlpSpec::validate() const {
  if (layer_sizes.size() < 2) throw ConfigError("MLP needs an input and at least one weight layer");
  for (std::size_t n : layer_sizes) {
    if (n == 0) throw ConfigError("MLP layer sizes must be positive");
  }
  if (!(weight_bound > 0.0) || !std::isfinite(weight_bound)) throw ConfigError("weight_bound must be positive");
}

std::size_t weight_count(const MlpSpec& spec) {
  spec.validate();
  std::size_t total = 0;
  for (std::size_t l = 1; l < spec.layer_sizes.size(); ++l) total += (spec.layer_sizes[l - 1] + 1) * spec.layer_sizes[l];
  return total;
}

namespace {

void check_shapes(const MlpSpec& spec, std::span<const double> weights, std::size_t input_size) {
  if (weights.size() != weight_count(spec)) {
    throw ConfigError("MLP expects " + std::to_string(weight_count(spec)) + " weights, got " +
                      std::to_string(weights.size()));
  }
  if (input_size != spec.inputs()) {
    throw ConfigError("MLP expects " + std::to_string(spec.inputs()) + " inputs, got " + std::to_string(input_size));
  }
}

void softmax_in_place(std::vector<double>& v) {
  const double peak = *std::max_element(v.begin(), v.end());
  double sum = 0.0;
  for (double& z : v) {
    z = std::exp(z - peak);
    sum += z;
  }
  for (double& z : v) z /= sum;
}

// Runs the net writing each layer into `layers`; buffers are reused.
void run(const MlpSpec& spec, std::span<const double> weights, std::span<const double> x,
         std::vector<std::vector<double>>& layers) {
  const std::size_t depth = spec.layer_sizes.size() - 1;
  layers.resize(depth);
  std::span<const double> in = x;
  std::size_t offset = 0;
  for (std::size_t l = 0; l < depth; ++l) {
    const std::size_t fan_in = spec.layer_sizes[l];
    const std::size_t fan_out = spec.layer_sizes[l + 1];
    auto& out = layers[l];
    out.resize(fan_out);
    for (std::size_t o = 0; o < fan_out; ++o) {
      const double* row = weights.data() + offset + o * (fan_in + 1);
      double z = row[fan_in];
      for (std::size_t i = 0; i < fan_in; ++i) z += row[i] * in[i];
      out[o] = z;
    }
    offset += (fan_in + 1) * fan_out;
    if (l == 0) {
      for (double& z : out) z = std::max(z, 0.0);
    } else if (l == 1) {
      softmax_in_place(out);
    }
    in = out;
  }
}

}  // namespace

std::vector<std::vector<double>> forward_layers(const MlpSpec& spec, std::span<const double> weights,
                                                std::span<const double> x) {
  check_shapes(spec, weights, x.size());
  std::vector<std::vector<double>> layers;
  run(spec, weights, x, layers);
  return layers;
}

std::vector<double> forward(const MlpSpec& spec, std::span<const double> weights, std::span<const double> x) {
  return forward_layers(spec, weights, x).back();
}

int predicted_class(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return static_cast<int>(best) + 1;
}

double nn_loss(const MlpSpec& spec, std::span<const double> weights, const Dataset& data) {
  if (static_cast<int>(spec.outputs()) != data.schema().class_count()) {
    throw ConfigError("MLP output width does not match the class count");
  }
  check_shapes(spec, weights, data.schema().feature_count());
  std::vector<std::vector<double>> layers;
  double total = 0.0;
  for (const auto& s : data.samples()) {
    run(spec, weights, s.features, layers);
    const auto& scores = layers.back();
    for (std::size_t k = 0; k < scores.size(); ++k) {
      const double target = (static_cast<int>(k) + 1 == s.label) ? 1.0 : 0.0;
      const double d = scores[k] - target;
      total += d * d;
    }
  }
  return 0.5 * total;
}

double nn_accuracy(const MlpSpec& spec, std::span<const double> weights, const Dataset& data) {
  check_shapes(spec, weights, data.schema().feature_count());
  if (data.empty()) return 0.0;
  std::vector<std::vector<double>> layers;
  std::size_t correct = 0;
  for (const auto& s : data.samples()) {
    run(spec, weights, s.features, layers);
    if (predicted_class(layers.back()) == s.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

NnFit train_nn(const Dataset& train, const MlpSpec& spec, const MostConfig& config, const Dataset* test) {
  spec.validate();
  const std::size_t d = weight_count(spec);
  Objective objective = [&](std::span<const double> w) { return nn_loss(spec, w, train); };
  NnFit fit;
  fit.report.optimizer = optimize(objective, SearchDomain::cube(d, -spec.weight_bound, spec.weight_bound), config);
  fit.weights = fit.report.optimizer.best_point;
  fit.report.train_loss = fit.report.optimizer.best_value;
  fit.report.train_accuracy = nn_accuracy(spec, fit.weights, train);
  if (test) fit.report.test_accuracy = nn_accuracy(spec, fit.weights, *test);
  return fit;
}

void write_weights(std::ostream& out, const MlpSpec& spec, std::span<const double> weights) {
  if (weights.size() != weight_count(spec)) throw ConfigError("weight vector does not match the spec");
  out << "mlp," << format_real(spec.weight_bound);
  for (std::size_t n : spec.layer_sizes) out << ',' << n;
  out << '\n';
  for (double w : weights) out << format_real(w) << '\n';
}

std::pair<MlpSpec, std::vector<double>> read_weights(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("weights: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto fields = split_on(line, ',');
  if (fields.size() < 4 || fields[0] != "mlp") throw ParseError("weights: missing 'mlp' header");
  MlpSpec spec;
  spec.weight_bound = parse_real_field(fields[1], "weights header");
  for (std::size_t i = 2; i < fields.size(); ++i) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), n);
    if (ec != std::errc() || ptr != fields[i].data() + fields[i].size()) {
      throw ParseError("weights header: bad layer size '" + std::string(fields[i]) + "'");
    }
    spec.layer_sizes.push_back(n);
  }
  spec.validate();
  std::vector<double> weights;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    weights.push_back(parse_real_field(line, "weights line " + std::to_string(line_no)));
  }
  if (weights.size() != weight_count(spec)) {
    throw ParseError("weights: expected " + std::to_string(weight_count(spec)) + " values, got " +
                     std::to_string(weights.size()));
  }
  return {std::move(spec), std::move(weights)};
}

}  // namespace sing
