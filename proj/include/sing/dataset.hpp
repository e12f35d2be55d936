#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sing {

// One ordinal code assigned to a categorical token.
struct Category {
  std::string token;
  double code = 0.0;
};

struct FeatureInfo {
  std::string name;
  // Empty for numeric features.
  std::vector<Category> categories;

  bool categorical() const { return !categories.empty(); }
  std::optional<double> encode(std::string_view token) const;
  std::optional<std::string> decode(double code) const;
};

struct Schema {
  std::vector<FeatureInfo> features;
  // class_names[k - 1] names class id k.
  std::vector<std::string> class_names;

  std::size_t feature_count() const { return features.size(); }
  int class_count() const { return static_cast<int>(class_names.size()); }
  std::vector<std::string> feature_names() const;

  // Throws ConfigError when fewer than one feature or two classes exist.
  void validate() const;

  bool operator==(const Schema& other) const;
};

struct Sample {
  std::vector<double> features;
  int label = 0;  // class id in 1..K
};

class Dataset {
 public:
  Dataset() = default;
  // Validates every sample against the schema.
  Dataset(Schema schema, std::vector<Sample> samples);

  const Schema& schema() const { return schema_; }
  std::span<const Sample> samples() const { return samples_; }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  // counts[k - 1] = number of samples with label k.
  std::vector<std::size_t> class_counts() const;

  // Rows at the given indices, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;

 private:
  Schema schema_;
  std::vector<Sample> samples_;
};

// Loaders for the UCI files. Malformed rows raise ParseError naming the line;
// unknown categorical tokens raise EncodingError.
Dataset load_iris(const std::filesystem::path& path);
Dataset load_car(const std::filesystem::path& path);
Dataset load_abalone(const std::filesystem::path& path, bool bin_rings);

Dataset read_iris(std::istream& in, std::string_view source = "<stream>");
Dataset read_car(std::istream& in, std::string_view source = "<stream>");
Dataset read_abalone(std::istream& in, bool bin_rings, std::string_view source = "<stream>");

Schema iris_schema();
Schema car_schema();
Schema abalone_schema(bool bin_rings);

// Class id for an abalone ring count under the three-bin scheme.
int abalone_ring_bin(int rings);

struct SplitSpec {
  std::uint64_t seed = 0;
  // Exactly one of test_per_class / test_count is used; test_per_class wins.
  std::optional<std::size_t> test_per_class;
  std::optional<std::size_t> test_count;
  // Train size; defaults to everything not drawn for test.
  std::optional<std::size_t> train_count;
  bool stratified = true;
  // Draw train independently from the full dataset, so it may share rows
  // with the test set.
  bool leak_test_from_full = false;
};

struct Split {
  Dataset train;
  Dataset test;
};

Split split(const Dataset& dataset, const SplitSpec& spec);

struct Halves {
  Dataset first;   // ceil(N/2) samples
  Dataset second;  // floor(N/2) samples
  std::vector<std::string> warnings;
};

// Stratified two-way partition used for the fold-swap fit.
Halves halve(const Dataset& train, std::uint64_t seed);

}  // namespace sing
