#include "sing/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "sing/error.hpp"
#include "sing/rng.hpp"

namespace sing {

std::optional<double> FeatureInfo::encode(std::string_view token) const {
  for (const auto& c : categories) {
    if (c.token == token) return c.code;
  }
  return std::nullopt;
}

std::optional<std::string> FeatureInfo::decode(double code) const {
  for (const auto& c : categories) {
    if (c.code == code) return c.token;
  }
  return std::nullopt;
}

std::vector<std::string> Schema::feature_names() const {
  std::vector<std::string> names;
  names.reserve(features.size());
  for (const auto& f : features) names.push_back(f.name);
  return names;
}

void Schema::validate() const {
  if (features.empty()) throw ConfigError("schema has no features");
  if (class_names.size() < 2) throw ConfigError("schema needs at least two classes");
}

bool Schema::operator==(const Schema& other) const {
  if (class_names != other.class_names) return false;
  if (features.size() != other.features.size()) return false;
  for (std::size_t j = 0; j < features.size(); ++j) {
    const auto& a = features[j];
    const auto& b = other.features[j];
    if (a.name != b.name || a.categories.size() != b.categories.size()) return false;
    for (std::size_t c = 0; c < a.categories.size(); ++c) {
      if (a.categories[c].token != b.categories[c].token ||
          a.categories[c].code != b.categories[c].code) {
        return false;
      }
    }
  }
  return true;
}

Dataset::Dataset(Schema schema, std::vector<Sample> samples)
    : schema_(std::move(schema)), samples_(std::move(samples)) {
  schema_.validate();
  const std::size_t m = schema_.feature_count();
  const int k = schema_.class_count();
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (s.features.size() != m) {
      throw ConfigError("sample " + std::to_string(i) + " has " + std::to_string(s.features.size()) +
                        " features, schema expects " + std::to_string(m));
    }
    if (s.label < 1 || s.label > k) {
      throw ConfigError("sample " + std::to_string(i) + " has label " + std::to_string(s.label) +
                        " outside 1.." + std::to_string(k));
    }
    for (double v : s.features) {
      if (!std::isfinite(v)) throw ConfigError("sample " + std::to_string(i) + " has a non-finite feature");
    }
  }
}

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(schema_.class_count()), 0);
  for (const auto& s : samples_) ++counts[static_cast<std::size_t>(s.label - 1)];
  return counts;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<Sample> rows;
  rows.reserve(indices.size());
  for (std::size_t i : indices) rows.push_back(samples_.at(i));
  return Dataset(schema_, std::move(rows));
}

// ---------------------------------------------------------------------------
// CSV loading

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string where(std::string_view source, std::size_t line_no) {
  return std::string(source) + ":" + std::to_string(line_no);
}

double parse_real(std::string_view field, std::string_view source, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(where(source, line_no) + ": expected a number, got '" + std::string(field) + "'");
  }
  return value;
}

int parse_int(std::string_view field, std::string_view source, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(where(source, line_no) + ": expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

using RowParser = std::function<Sample(const std::vector<std::string_view>&, std::size_t)>;

Dataset read_rows(std::istream& in, std::string_view source, Schema schema, std::size_t field_count,
                  const RowParser& parse_row) {
  std::vector<Sample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    auto fields = split_fields(view);
    if (fields.size() != field_count) {
      throw ParseError(where(source, line_no) + ": expected " + std::to_string(field_count) + " fields, got " +
                       std::to_string(fields.size()));
    }
    for (auto f : fields) {
      if (f.empty()) throw ParseError(where(source, line_no) + ": missing value");
    }
    samples.push_back(parse_row(fields, line_no));
  }
  if (samples.empty()) throw ParseError(std::string(source) + ": no samples");
  return Dataset(std::move(schema), std::move(samples));
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

FeatureInfo categorical(std::string name, std::vector<Category> cats) {
  return FeatureInfo{std::move(name), std::move(cats)};
}

}  // namespace

Schema iris_schema() {
  Schema s;
  for (const char* n : {"sepal_length", "sepal_width", "petal_length", "petal_width"}) {
    s.features.push_back(FeatureInfo{n, {}});
  }
  s.class_names = {"Iris-versicolor", "Iris-setosa", "Iris-virginica"};
  return s;
}

Schema car_schema() {
  Schema s;
  const std::vector<Category> price = {{"low", 1}, {"med", 2}, {"high", 3}, {"vhigh", 4}};
  s.features.push_back(categorical("buying", price));
  s.features.push_back(categorical("maint", price));
  s.features.push_back(categorical("doors", {{"2", 2}, {"3", 3}, {"4", 4}, {"5more", 5}}));
  s.features.push_back(categorical("persons", {{"2", 2}, {"4", 4}, {"more", 5}}));
  s.features.push_back(categorical("lug_boot", {{"small", 1}, {"med", 2}, {"big", 3}}));
  s.features.push_back(categorical("safety", {{"low", 1}, {"med", 2}, {"high", 3}}));
  s.class_names = {"unacc", "acc", "good", "vgood"};
  return s;
}

Schema abalone_schema(bool bin_rings) {
  Schema s;
  s.features.push_back(categorical("sex", {{"M", 1}, {"F", 2}, {"I", 3}}));
  for (const char* n : {"length", "diameter", "height", "whole_weight", "shucked_weight", "viscera_weight",
                        "shell_weight"}) {
    s.features.push_back(FeatureInfo{n, {}});
  }
  if (bin_rings) {
    s.class_names = {"rings<9", "9<=rings<18", "rings>=18"};
  } else {
    for (int r = 1; r <= 29; ++r) s.class_names.push_back(std::to_string(r));
  }
  return s;
}

int abalone_ring_bin(int rings) {
  if (rings < 9) return 1;
  if (rings < 18) return 2;
  return 3;
}

Dataset read_iris(std::istream& in, std::string_view source) {
  Schema schema = iris_schema();
  const Schema& s = schema;
  auto row = [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    Sample out;
    for (std::size_t j = 0; j < 4; ++j) out.features.push_back(parse_real(f[j], source, line_no));
    auto it = std::find(s.class_names.begin(), s.class_names.end(), f[4]);
    if (it == s.class_names.end()) {
      throw EncodingError(where(source, line_no) + ": unknown species '" + std::string(f[4]) + "'");
    }
    out.label = static_cast<int>(it - s.class_names.begin()) + 1;
    return out;
  };
  return read_rows(in, source, schema, 5, row);
}

Dataset read_car(std::istream& in, std::string_view source) {
  Schema schema = car_schema();
  const Schema& s = schema;
  auto row = [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    Sample out;
    for (std::size_t j = 0; j < 6; ++j) {
      auto code = s.features[j].encode(f[j]);
      if (!code) {
        throw EncodingError(where(source, line_no) + ": unknown token '" + std::string(f[j]) + "' in column " +
                            s.features[j].name);
      }
      out.features.push_back(*code);
    }
    auto it = std::find(s.class_names.begin(), s.class_names.end(), f[6]);
    if (it == s.class_names.end()) {
      throw EncodingError(where(source, line_no) + ": unknown token '" + std::string(f[6]) + "' in column class");
    }
    out.label = static_cast<int>(it - s.class_names.begin()) + 1;
    return out;
  };
  return read_rows(in, source, schema, 7, row);
}

Dataset read_abalone(std::istream& in, bool bin_rings, std::string_view source) {
  Schema schema = abalone_schema(bin_rings);
  const Schema& s = schema;
  auto row = [&](const std::vector<std::string_view>& f, std::size_t line_no) {
    Sample out;
    auto sex = s.features[0].encode(f[0]);
    if (!sex) {
      throw EncodingError(where(source, line_no) + ": unknown token '" + std::string(f[0]) + "' in column sex");
    }
    out.features.push_back(*sex);
    for (std::size_t j = 1; j < 8; ++j) out.features.push_back(parse_real(f[j], source, line_no));
    const int rings = parse_int(f[8], source, line_no);
    if (rings < 1 || rings > 29) {
      throw ParseError(where(source, line_no) + ": rings " + std::to_string(rings) + " outside 1..29");
    }
    out.label = bin_rings ? abalone_ring_bin(rings) : rings;
    return out;
  };
  return read_rows(in, source, schema, 9, row);
}

Dataset load_iris(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_iris(in, path.string());
}

Dataset load_car(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_car(in, path.string());
}

Dataset load_abalone(const std::filesystem::path& path, bool bin_rings) {
  auto in = open_or_throw(path);
  return read_abalone(in, bin_rings, path.string());
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

enum StreamTag : std::uint64_t { kTestDraw = 1, kTrainDraw = 2, kHalve = 3 };

std::vector<std::vector<std::size_t>> indices_by_class(const Dataset& d) {
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(d.schema().class_count()));
  for (std::size_t i = 0; i < d.size(); ++i) by_class[static_cast<std::size_t>(d[i].label - 1)].push_back(i);
  return by_class;
}

// Largest-remainder proportional allocation of `total` over class sizes.
std::vector<std::size_t> allocate(std::size_t total, const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> quota(sizes.size(), 0);
  if (n == 0) return quota;
  std::vector<std::pair<std::size_t, std::size_t>> remainders;  // (remainder numerator, class)
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    quota[k] = total * sizes[k] / n;
    assigned += quota[k];
    remainders.emplace_back(total * sizes[k] % n, k);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t r = 0; assigned < total && r < remainders.size(); ++r) {
    const std::size_t k = remainders[r].second;
    if (quota[k] < sizes[k]) {
      ++quota[k];
      ++assigned;
    }
  }
  return quota;
}

std::vector<std::size_t> shuffled(std::vector<std::size_t> items, std::uint64_t seed) {
  Rng rng(seed);
  shuffle(std::span<std::size_t>(items), rng);
  return items;
}

// Draws quota[k] rows from each class pool; the rest are returned as leftovers.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> draw_stratified(
    const std::vector<std::vector<std::size_t>>& pools, const std::vector<std::size_t>& quota, std::uint64_t seed,
    std::uint64_t tag) {
  std::vector<std::size_t> taken, left;
  for (std::size_t k = 0; k < pools.size(); ++k) {
    auto order = shuffled(pools[k], derive_seed(seed, {tag, k}));
    for (std::size_t i = 0; i < order.size(); ++i) (i < quota[k] ? taken : left).push_back(order[i]);
  }
  std::sort(taken.begin(), taken.end());
  std::sort(left.begin(), left.end());
  return {taken, left};
}

std::vector<std::vector<std::size_t>> group_by_class(const Dataset& d, const std::vector<std::size_t>& rows) {
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(d.schema().class_count()));
  for (std::size_t i : rows) by_class[static_cast<std::size_t>(d[i].label - 1)].push_back(i);
  return by_class;
}

std::vector<std::size_t> sizes_of(const std::vector<std::vector<std::size_t>>& pools) {
  std::vector<std::size_t> s;
  for (const auto& p : pools) s.push_back(p.size());
  return s;
}

}  // namespace

Split split(const Dataset& dataset, const SplitSpec& spec) {
  const std::size_t n = dataset.size();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});

  std::vector<std::size_t> test, rest;
  if (spec.test_per_class) {
    if (!spec.stratified) throw ConfigError("test_per_class requires a stratified split");
    auto pools = indices_by_class(dataset);
    for (std::size_t k = 0; k < pools.size(); ++k) {
      if (*spec.test_per_class > pools[k].size()) {
        throw ConfigError("test_per_class " + std::to_string(*spec.test_per_class) + " exceeds the " +
                          std::to_string(pools[k].size()) + " samples of class " + std::to_string(k + 1));
      }
    }
    std::vector<std::size_t> quota(pools.size(), *spec.test_per_class);
    std::tie(test, rest) = draw_stratified(pools, quota, spec.seed, kTestDraw);
  } else {
    const std::size_t test_count = spec.test_count.value_or(0);
    if (test_count > n) {
      throw ConfigError("test_count " + std::to_string(test_count) + " exceeds dataset size " + std::to_string(n));
    }
    if (spec.stratified) {
      auto pools = indices_by_class(dataset);
      std::tie(test, rest) = draw_stratified(pools, allocate(test_count, sizes_of(pools)), spec.seed, kTestDraw);
    } else {
      auto order = shuffled(all, derive_seed(spec.seed, {kTestDraw}));
      test.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(test_count));
      rest.assign(order.begin() + static_cast<std::ptrdiff_t>(test_count), order.end());
      std::sort(test.begin(), test.end());
      std::sort(rest.begin(), rest.end());
    }
  }

  // Pool the training rows are drawn from.
  const std::vector<std::size_t>& pool = spec.leak_test_from_full ? all : rest;
  const std::size_t default_train = spec.leak_test_from_full ? n - test.size() : rest.size();
  const std::size_t train_count = spec.train_count.value_or(default_train);
  if (train_count > pool.size()) {
    throw ConfigError("train_count " + std::to_string(train_count) + " exceeds the " + std::to_string(pool.size()) +
                      " available samples");
  }

  std::vector<std::size_t> train;
  if (train_count == pool.size()) {
    train = pool;
  } else if (spec.stratified) {
    auto pools = group_by_class(dataset, pool);
    train = draw_stratified(pools, allocate(train_count, sizes_of(pools)), spec.seed, kTrainDraw).first;
  } else {
    auto order = shuffled(pool, derive_seed(spec.seed, {kTrainDraw}));
    train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train_count));
    std::sort(train.begin(), train.end());
  }
  return Split{dataset.subset(train), dataset.subset(test)};
}

Halves halve(const Dataset& train, std::uint64_t seed) {
  if (train.size() < 2) throw ConfigError("halve needs at least two samples");
  auto pools = indices_by_class(train);
  std::vector<std::size_t> sequence;
  for (std::size_t k = 0; k < pools.size(); ++k) {
    auto order = shuffled(pools[k], derive_seed(seed, {kHalve, k}));
    sequence.insert(sequence.end(), order.begin(), order.end());
  }
  std::vector<std::size_t> first, second;
  for (std::size_t p = 0; p < sequence.size(); ++p) (p % 2 == 0 ? first : second).push_back(sequence[p]);
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());

  Halves out{train.subset(first), train.subset(second), {}};
  const auto present = train.class_counts();
  const auto a = out.first.class_counts();
  const auto b = out.second.class_counts();
  for (std::size_t k = 0; k < present.size(); ++k) {
    if (present[k] == 0) continue;
    if (a[k] == 0 || b[k] == 0) {
      out.warnings.push_back("class " + std::to_string(k + 1) + " (" + train.schema().class_names[k] +
                             ") is missing from one half");
    }
  }
  return out;
}

}  // namespace sing
