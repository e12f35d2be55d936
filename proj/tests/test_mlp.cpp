#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "sing/error.hpp"
#include "sing/mlp.hpp"
#include "sing/rng.hpp"

using namespace sing;

namespace {

std::vector<double> random_vector(std::size_t n, Rng& rng, double scale) {
  std::vector<double> v(n);
  for (double& x : v) x = (2.0 * rng.uniform_open() - 1.0) * scale;
  return v;
}

Schema toy_schema(std::size_t inputs, int classes) {
  Schema s;
  for (std::size_t i = 0; i < inputs; ++i) s.features.push_back(FeatureInfo{"x" + std::to_string(i), {}});
  for (int k = 1; k <= classes; ++k) s.class_names.push_back("c" + std::to_string(k));
  return s;
}

// Weights printed in the published iris weight table, in table order; only
// the count and range are meaningful here.
const std::vector<double> kTableWeights = {
    1.19727,  -1.50391, -0.49902, 1.54395, -1.02734, -1.59277, 0.83789,  1.61035, 1.63867,
    0.95117,  -1.38770, -0.61328, 1.88379, 1.61328,  1.53320,  -0.50000, -1.75,   -2.0,
    1.75,     0.00098,  0.24707,  0.25195, 0.99609,  -0.12891, -0.375,   1.81543, -0.96680};

}  // namespace

TEST_CASE("weight counts match a per-layer hand count") {
  CHECK(weight_count(MlpSpec{{4, 3, 3}}) == 5 * 3 + 4 * 3);
  CHECK(weight_count(MlpSpec{{4, 3, 3}}) == 27);
  CHECK(weight_count(MlpSpec{{6, 10, 8, 4}}) == 7 * 10 + 11 * 8 + 9 * 4);
  CHECK(weight_count(MlpSpec{{6, 10, 8, 4}}) == 194);
  CHECK(weight_count(MlpSpec{{1, 1}}) == 2);
  CHECK_THROWS_AS(weight_count(MlpSpec{{4}}), ConfigError);
  CHECK_THROWS_AS(weight_count(MlpSpec{{4, 0, 3}}), ConfigError);
}

TEST_CASE("zero weights give a uniform softmax") {
  MlpSpec spec{{4, 3, 3}};
  auto s = forward(spec, std::vector<double>(27, 0.0), std::vector<double>{5.1, 3.5, 1.4, 0.2});
  for (double v : s) CHECK(v == doctest::Approx(1.0 / 3.0));
  CHECK(predicted_class(s) == 1);
}

TEST_CASE("softmax layer is positive and normalised") {
  Rng rng(5);
  MlpSpec spec{{6, 10, 8, 4}};
  for (int t = 0; t < 200; ++t) {
    auto w = random_vector(194, rng, 2.0);
    auto x = random_vector(6, rng, 50.0);
    auto layers = forward_layers(spec, w, x);
    REQUIRE(layers.size() == 3);
    double sum = 0.0;
    for (double v : layers[1]) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
    for (double v : layers[0]) CHECK(v >= 0.0);
  }
}

TEST_CASE("softmax is stable for huge pre-activations") {
  MlpSpec spec{{1, 1, 2}};
  // Hidden ReLU passes 1e6 through; second layer weights push logits to +-1e6.
  std::vector<double> w{1.0, 0.0, 1.0, 0.0, -1.0, 0.0};
  auto s = forward(spec, w, std::vector<double>{1e6});
  CHECK(std::isfinite(s[0]));
  CHECK(s[0] == 1.0);
  CHECK(s[1] == 0.0);
}

TEST_CASE("loss of a uniform three-way softmax is one third per sample") {
  MlpSpec spec{{1, 3, 3}};
  Dataset d(toy_schema(1, 3), {Sample{{0.5}, 1}});
  CHECK(nn_loss(spec, std::vector<double>(weight_count(spec), 0.0), d) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("squared error falls along the segment toward the target") {
  const std::vector<double> start{0.2, 0.5, 0.3}, target{1.0, 0.0, 0.0};
  auto loss = [&](double t) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double v = start[k] + t * (target[k] - start[k]) - target[k];
      s += v * v;
    }
    return 0.5 * s;
  };
  for (int i = 0; i < 100; ++i) CHECK(loss((i + 1) / 100.0) <= loss(i / 100.0));
  CHECK(loss(1.0) == 0.0);
}

TEST_CASE("first layer is positively homogeneous in an active neuron's row") {
  Rng rng(7);
  MlpSpec spec{{4, 3, 3}};
  int checked = 0;
  for (int t = 0; t < 500 && checked < 100; ++t) {
    auto w = random_vector(27, rng, 2.0);
    auto x = random_vector(4, rng, 3.0);
    auto base = forward_layers(spec, w, x);
    if (base[0][0] <= 0.0) continue;
    const double a = 0.5 + 2.0 * rng.uniform_open();
    auto scaled = w;
    for (int i = 0; i < 5; ++i) scaled[i] *= a;
    auto after = forward_layers(spec, scaled, x);
    CHECK(after[0][0] == doctest::Approx(a * base[0][0]).epsilon(1e-12));
    CHECK(after[0][1] == base[0][1]);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("adding a constant to every output bias keeps the argmax") {
  Rng rng(9);
  MlpSpec spec{{6, 10, 8, 4}};
  for (int t = 0; t < 200; ++t) {
    auto w = random_vector(194, rng, 2.0);
    auto x = random_vector(6, rng, 4.0);
    const int before = predicted_class(forward(spec, w, x));
    const double c = 10.0 * (2.0 * rng.uniform_open() - 1.0);
    // Output layer starts after 70 + 88 weights; each of its 4 rows is 8 weights then a bias.
    for (int o = 0; o < 4; ++o) w[158 + o * 9 + 8] += c;
    CHECK(predicted_class(forward(spec, w, x)) == before);
  }
}

TEST_CASE("argmax ties go to the smallest class") {
  CHECK(predicted_class(std::vector<double>{0.2, 0.4, 0.4}) == 2);
  CHECK(predicted_class(std::vector<double>{0.5, 0.5}) == 1);
}

TEST_CASE("published iris weights fit the (4,3,3) shape and give a valid class") {
  MlpSpec spec{{4, 3, 3}};
  REQUIRE(kTableWeights.size() == weight_count(spec));
  for (double w : kTableWeights) {
    CHECK(w >= -2.0);
    CHECK(w <= 2.0);
  }
  const int k = predicted_class(forward(spec, kTableWeights, std::vector<double>{5.1, 3.5, 1.4, 0.2}));
  CHECK(k >= 1);
  CHECK(k <= 3);
}

TEST_CASE("a linearly separable toy set is learned exactly") {
  std::vector<Sample> rows;
  for (int i = 0; i < 10; ++i) rows.push_back(Sample{{-1.0 - 0.1 * i}, 1});
  for (int i = 0; i < 10; ++i) rows.push_back(Sample{{1.0 + 0.1 * i}, 2});
  Dataset d(toy_schema(1, 2), rows);
  // Smallest net with one score per class: a single ReLU layer.
  MlpSpec spec{{1, 2}};
  MostConfig cfg;
  cfg.seed = 3;
  cfg.mc_samples = 200;
  auto fit = train_nn(d, spec, cfg, &d);
  CHECK(fit.report.train_accuracy == 1.0);
  CHECK(fit.report.test_accuracy == 1.0);

  // Oracle: an exhaustive lattice over the 4 weights also reaches accuracy 1,
  // and the optimizer's loss is within the lattice's reach.
  Objective loss = [&](std::span<const double> w) { return nn_loss(spec, w, d); };
  auto grid = grid_oracle(loss, SearchDomain::cube(4, -2.0, 2.0), 41);
  CHECK(nn_accuracy(spec, grid.best_point, d) == 1.0);
  CHECK(fit.report.train_loss <= grid.best_value + 1e-3 * (grid.worst_value - grid.best_value));
}

TEST_CASE("shape mismatches are rejected") {
  MlpSpec spec{{4, 3, 3}};
  CHECK_THROWS_AS(forward(spec, std::vector<double>(26, 0.0), std::vector<double>(4, 0.0)), ConfigError);
  CHECK_THROWS_AS(forward(spec, std::vector<double>(27, 0.0), std::vector<double>(3, 0.0)), ConfigError);
  Dataset two(toy_schema(4, 2), {Sample{{0, 0, 0, 0}, 1}});
  CHECK_THROWS_AS(nn_loss(spec, std::vector<double>(27, 0.0), two), ConfigError);
}

TEST_CASE("weight file round-trips") {
  MlpSpec spec{{6, 10, 8, 4}, 2.0};
  Rng rng(11);
  auto w = random_vector(194, rng, 2.0);
  std::stringstream buf;
  write_weights(buf, spec, w);
  auto [back_spec, back] = read_weights(buf);
  CHECK(back_spec.layer_sizes == spec.layer_sizes);
  CHECK(back_spec.weight_bound == 2.0);
  CHECK(back == w);

  std::stringstream short_file("mlp,2,1,1\n0.5\n");
  CHECK_THROWS_AS(read_weights(short_file), ParseError);
  std::stringstream bad_header("net,2,1,1\n0.5\n0.1\n");
  CHECK_THROWS_AS(read_weights(bad_header), ParseError);
}
