#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sing/dataset.hpp"
#include "sing/mlp.hpp"

namespace sing::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitThresholdMiss = 1;
inline constexpr int kExitInputError = 2;

enum class Command { fit, eval, reproduce, most_demo };
enum class DatasetName { iris, car, abalone };
enum class Method { sing, nn, both };

std::string to_string(DatasetName name);

struct RunConfig {
  Command command = Command::fit;
  DatasetName dataset = DatasetName::iris;
  std::filesystem::path data_path;  // empty: data/<dataset>.data
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};  // reproduce only
  Method method = Method::sing;

  // Unset values fall back to the benchmark protocol.
  std::optional<double> delta_max;
  std::optional<int> mc_samples;
  std::optional<int> nn_mc_samples;
  std::optional<bool> initial_scan;

  int divisions = 20;
  double tolerance = 1e-6;
  int max_sweeps = 60;
  bool relearn = true;  // relearn Unknown samples while scoring the test set
  bool leak_test_from_full = false;
  std::filesystem::path output_dir = ".";
  std::filesystem::path model;  // eval only

  // Throws ConfigError for non-positive numeric settings.
  void validate() const;
};

// Fixed experimental setup of one benchmark, with the published figures.
struct Protocol {
  DatasetName dataset = DatasetName::iris;
  SplitSpec split;  // seed filled in per run
  double delta_max = 1.0;
  int mc_samples = 50;
  std::optional<MlpSpec> nn;
  int nn_mc_samples = 50;
  bool nn_initial_scan = false;

  double published_sing_teaching = 1.0;
  double published_sing_test = 1.0;
  std::optional<double> published_sing_test_alt;  // a second published figure
  std::optional<double> published_nn_teaching;
  std::optional<double> published_nn_test;
  std::optional<double> external_baseline;  // published result of another method

  double min_sing_test = 0.0;
  std::optional<double> min_sing_teaching;
  std::optional<double> min_nn_test;
};

Protocol protocol_for(DatasetName name);

// Optimizer settings and split for one run; command-line overrides win over
// the protocol defaults.
MostConfig sing_most_config(const RunConfig& config, const Protocol& protocol);
MostConfig nn_most_config(const RunConfig& config, const Protocol& protocol, std::uint64_t seed);
Split protocol_split(const Dataset& data, const RunConfig& config, const Protocol& protocol, std::uint64_t seed);

Dataset load_benchmark(DatasetName name, const std::filesystem::path& path);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sing::cli
