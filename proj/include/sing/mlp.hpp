#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sing/dataset.hpp"
#include "sing/most.hpp"

namespace sing {

// Fully connected net. Layer activations by position: first weight layer ReLU,
// second softmax, any further layer identity.
//
// Flat weight order: layer by layer; inside a layer, one row per output
// neuron holding its fan_in weights followed by its bias.
struct MlpSpec {
  std::vector<std::size_t> layer_sizes;  // input, hidden..., output
  double weight_bound = 2.0;             // search box [-B, B] per weight

  std::size_t inputs() const { return layer_sizes.front(); }
  std::size_t outputs() const { return layer_sizes.back(); }
  void validate() const;
};

std::size_t weight_count(const MlpSpec& spec);

// Activations of every layer after the input, in order.
std::vector<std::vector<double>> forward_layers(const MlpSpec& spec, std::span<const double> weights,
                                                std::span<const double> x);

// Final-layer scores.
std::vector<double> forward(const MlpSpec& spec, std::span<const double> weights, std::span<const double> x);

// Argmax + 1; ties go to the smallest class.
int predicted_class(std::span<const double> scores);

// Half the summed squared distance between scores and one-hot targets.
double nn_loss(const MlpSpec& spec, std::span<const double> weights, const Dataset& data);

double nn_accuracy(const MlpSpec& spec, std::span<const double> weights, const Dataset& data);

struct NnTrainReport {
  OptimizeReport optimizer;
  double train_loss = 0.0;
  double train_accuracy = 0.0;
  std::optional<double> test_accuracy;
};

struct NnFit {
  std::vector<double> weights;
  NnTrainReport report;
};

NnFit train_nn(const Dataset& train, const MlpSpec& spec, const MostConfig& config, const Dataset* test = nullptr);

// Weight dump: header "mlp,<B>,<n_0>,...,<n_L>" then one weight per line.
void write_weights(std::ostream& out, const MlpSpec& spec, std::span<const double> weights);
std::pair<MlpSpec, std::vector<double>> read_weights(std::istream& in);

}  // namespace sing
