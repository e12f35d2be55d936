#include <doctest.h>

#include <cmath>
#include <vector>

#include "sing/error.hpp"
#include "sing/sing_core.hpp"

using namespace sing;

namespace {

Schema line_schema(int classes) {
  Schema s{{FeatureInfo{"x", {}}}, {}};
  for (int k = 1; k <= classes; ++k) s.class_names.push_back("c" + std::to_string(k));
  return s;
}

Dataset line_data(const std::vector<std::pair<double, int>>& rows, int classes = 2) {
  std::vector<Sample> samples;
  for (auto [x, y] : rows) samples.push_back(Sample{{x}, y});
  return Dataset(line_schema(classes), samples);
}

// Independent membership rule written directly from the half-open box definition.
bool inside(double x, double c, double d) { return c - d <= x && x < c + d; }

// Squared-label error of count-vote prediction, computed from scratch.
double brute_fold_error(const Dataset& centers, const Dataset& validation, double delta) {
  double err = 0.0;
  for (const auto& v : validation.samples()) {
    std::vector<int> counts(static_cast<std::size_t>(centers.schema().class_count()), 0);
    for (const auto& c : centers.samples()) {
      if (inside(v.features[0], c.features[0], delta)) ++counts[static_cast<std::size_t>(c.label - 1)];
    }
    int label = 0, best = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] > best) {
        best = counts[k];
        label = static_cast<int>(k) + 1;
      }
    }
    err += 0.5 * (v.label - label) * (v.label - label);
  }
  return err;
}

}  // namespace

TEST_CASE("pulse edges: closed at the left, open at the right") {
  CHECK(pulse_psi(2.0, 2.0, 0.5) == 1);
  CHECK(pulse_psi(1.5, 2.0, 0.5) == 1);
  CHECK(pulse_psi(2.5, 2.0, 0.5) == 0);
  CHECK(pulse_psi(3.0, 2.0, 0.5) == 0);
  CHECK(pulse_psi(std::nextafter(2.5, 0.0), 2.0, 0.5) == 1);
  CHECK(pulse_psi(std::nextafter(1.5, 0.0), 2.0, 0.5) == 0);
  CHECK(unit_step(0.0) == 1);
  CHECK(unit_step(-1e-300) == 0);
}

TEST_CASE("pulse matches the box rule on a dense grid") {
  const double c = 0.3, d = 0.25;
  for (int i = -400; i <= 400; ++i) {
    const double x = i / 400.0;
    CHECK(pulse_psi(x, c, d) == (inside(x, c, d) ? 1 : 0));
  }
}

TEST_CASE("phi returns the label inside the box and zero outside") {
  const DeltaVector delta({0.75, 0.75, 0.75, 0.5});
  const Group g{{5.1, 3.5, 1.4, 0.1}, 1, GroupOrigin::initial};
  CHECK(phi(g.center, g, delta) == 1);
  CHECK(phi(std::vector<double>{5.0, 3.5, 1.3, 0.3}, g, delta) == 1);
  CHECK(phi(std::vector<double>{5.0, 3.5, 1.3, 0.6}, g, delta) == 0);
  const Group g3{{1.0, 1.0, 1.0, 1.0}, 3, GroupOrigin::initial};
  CHECK(phi(g3.center, g3, delta) == 3);
  CHECK_THROWS_AS(phi(std::vector<double>{1.0}, g3, delta), ConfigError);
}

TEST_CASE("DeltaVector rejects non-positive or non-finite values") {
  CHECK_THROWS_AS(DeltaVector({0.0}), ConfigError);
  CHECK_THROWS_AS(DeltaVector({-1.0}), ConfigError);
  CHECK_THROWS_AS(DeltaVector({NAN}), ConfigError);
  CHECK_THROWS_AS(DeltaVector({INFINITY}), ConfigError);
  CHECK_THROWS_AS(DeltaVector({}), ConfigError);
  CHECK_NOTHROW(DeltaVector({1e-300}));
}

TEST_CASE("build_groups keeps one group per sample in order, duplicates included") {
  auto d = line_data({{0.0, 1}, {0.0, 1}, {2.0, 2}});
  auto store = build_groups(d, DeltaVector({0.5}));
  REQUIRE(store.size() == 3);
  CHECK(store.groups()[0].center == store.groups()[1].center);
  CHECK(store.groups()[2].label == 2);
  for (const auto& g : store.groups()) CHECK(g.origin == GroupOrigin::initial);
  CHECK_THROWS_AS(build_groups(Dataset(line_schema(2), {}), DeltaVector({0.5})), ConfigError);
  CHECK_THROWS_AS(build_groups(d, DeltaVector({0.5, 0.5})), ConfigError);
}

TEST_CASE("predict: Unknown, counts and tie-break") {
  auto store = build_groups(line_data({{0.0, 1}, {0.2, 2}, {5.0, 2}, {5.1, 2}}), DeltaVector({0.5}));
  auto far = predict(store, std::vector<double>{100.0});
  CHECK(far.label == kUnknownLabel);
  CHECK(far.counts == std::vector<int>{0, 0});
  CHECK(far.matched_groups == 0);

  auto tie = predict(store, std::vector<double>{0.1});
  CHECK(tie.counts == std::vector<int>{1, 1});
  CHECK(tie.label == 1);
  CHECK(tie.matched_groups == 2);

  auto two = predict(store, std::vector<double>{5.05});
  CHECK(two.label == 2);
  CHECK(two.counts == std::vector<int>{0, 2});
  CHECK_THROWS_AS(predict(store, std::vector<double>{1.0, 2.0}), ConfigError);
}

TEST_CASE("relearn appends a group that covers its own centre") {
  auto store = build_groups(line_data({{0.0, 1}, {1.0, 2}}), DeltaVector({0.1}));
  const std::vector<double> x{3.0};
  CHECK(predict(store, x).label == kUnknownLabel);
  relearn(store, x, 2);
  CHECK(store.size() == 3);
  CHECK(store.groups().back().origin == GroupOrigin::relearned);
  CHECK(predict(store, x).label == 2);
  CHECK_THROWS_AS(relearn(store, x, 3), ConfigError);
}

TEST_CASE("evaluate: error of an Unknown class-3 sample is 4.5") {
  auto store = build_groups(line_data({{0.0, 1}}, 3), DeltaVector({0.1}));
  auto e = evaluate(std::as_const(store), line_data({{9.0, 3}}, 3));
  CHECK(e.error == 4.5);
  CHECK(e.accuracy == 0.0);
  CHECK(e.predictions.front().label == kUnknownLabel);
}

TEST_CASE("evaluate: all correct gives zero error") {
  auto data = line_data({{0.0, 1}, {1.0, 2}, {2.0, 1}});
  auto store = build_groups(data, DeltaVector({0.4}));
  auto e = evaluate(std::as_const(store), data);
  CHECK(e.error == 0.0);
  CHECK(e.accuracy == 1.0);
}

TEST_CASE("evaluate with relearning lets later samples match earlier Unknowns") {
  auto store = build_groups(line_data({{0.0, 1}}), DeltaVector({0.5}));
  auto test = line_data({{10.0, 2}, {10.2, 2}, {20.0, 1}});
  auto frozen = evaluate(std::as_const(store), test);
  CHECK(frozen.accuracy == 0.0);
  CHECK(store.size() == 1);

  auto e = evaluate(store, test, true);
  CHECK(e.relearned == 2);
  CHECK(store.size() == 3);
  CHECK(e.predictions[0].label == kUnknownLabel);
  CHECK(e.predictions[1].label == 2);
  CHECK(e.predictions[2].label == kUnknownLabel);
  // Scoring happens before mutation, so the Unknown samples still count as wrong.
  CHECK(e.accuracy == doctest::Approx(1.0 / 3.0));
  CHECK(e.error == doctest::Approx(0.5 * 4 + 0.5 * 1));
}

TEST_CASE("fold_error agrees with a from-scratch count vote") {
  auto centers = line_data({{0.0, 1}, {0.3, 1}, {0.9, 2}, {1.4, 2}, {2.0, 1}});
  auto validation = line_data({{0.1, 1}, {0.6, 2}, {1.2, 2}, {1.8, 1}, {3.0, 2}});
  for (int i = 1; i <= 300; ++i) {
    const double d = i / 100.0;
    CHECK(fold_error(centers, validation, std::vector<double>{d}, false) == brute_fold_error(centers, validation, d));
  }
}

TEST_CASE("train_sing separates two tight clusters with zero fold error") {
  auto train = line_data({{0.0, 1}, {0.1, 1}, {1.0, 2}, {1.1, 2}});
  SingTrainConfig cfg;
  cfg.delta_max = {1.0};
  cfg.seed = 17;
  auto fit = train_sing(train, cfg);
  const auto& r = fit.report;
  CHECK(r.half_sizes[0] == 2);
  CHECK(r.half_sizes[1] == 2);
  CHECK(r.error_first_to_second == 0.0);
  CHECK(r.error_second_to_first == 0.0);
  CHECK(fit.delta[0] > 0.1);
  CHECK(fit.delta[0] < 0.9);
  CHECK(fit.delta[0] == std::max(r.delta_first_to_second[0], r.delta_second_to_first[0]));
  CHECK(r.teaching_accuracy == 1.0);

  // Brute force over a fine lattice: every Delta strictly between the
  // within-class gap (0.1) and the between-class gap (0.9) is error free,
  // and nothing at or below the within-class gap is.
  auto halves = halve(train, derive_seed(cfg.seed, {11}));
  for (int i = 1; i < 1000; ++i) {
    const double d = i / 1000.0;
    const bool zero = brute_fold_error(halves.first, halves.second, d) == 0.0 &&
                      brute_fold_error(halves.second, halves.first, d) == 0.0;
    if (d > 0.1 + 1e-9 && d < 0.9 - 1e-9) CHECK(zero);
    if (d <= 0.1) CHECK_FALSE(zero);
  }
}

TEST_CASE("train_sing is deterministic per seed") {
  auto train = line_data({{0.0, 1}, {0.4, 1}, {0.7, 1}, {1.5, 2}, {1.9, 2}, {2.4, 2}, {0.2, 1}, {2.0, 2}});
  SingTrainConfig cfg;
  cfg.delta_max = {2.0};
  cfg.seed = 5;
  auto a = train_sing(train, cfg);
  auto b = train_sing(train, cfg);
  CHECK(a.delta == b.delta);
  CHECK(a.report.optimize_first_to_second.best_point == b.report.optimize_first_to_second.best_point);
}

TEST_CASE("train_sing preconditions") {
  SingTrainConfig cfg;
  CHECK_THROWS_AS(train_sing(line_data({{0.0, 1}}), cfg), ConfigError);
  CHECK_THROWS_AS(train_sing(line_data({{0.0, 1}, {1.0, 1}}), cfg), ConfigError);
  cfg.delta_max = {1.0, 2.0};
  CHECK_THROWS_AS(train_sing(line_data({{0.0, 1}, {1.0, 2}}), cfg), ConfigError);
  cfg.delta_max = {0.0};
  CHECK_THROWS_AS(train_sing(line_data({{0.0, 1}, {1.0, 2}}), cfg), ConfigError);
}

TEST_CASE("train_sing counts duplicate rows") {
  auto train = line_data({{0.0, 1}, {0.0, 1}, {1.0, 2}, {1.0, 2}, {1.0, 2}});
  SingTrainConfig cfg;
  cfg.most.max_sweeps = 5;
  auto fit = train_sing(train, cfg);
  CHECK(fit.report.duplicate_groups == 3);
}
