#include "sing/sing_core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sing/error.hpp"

namespace sing {

DeltaVector::DeltaVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ConfigError("Delta vector is empty");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j]) || !(values_[j] > 0.0)) {
      throw ConfigError("Delta component " + std::to_string(j) + " must be positive and finite");
    }
  }
}

GroupStore::GroupStore(Schema schema, DeltaVector delta, std::vector<Group> groups)
    : schema_(std::move(schema)), delta_(std::move(delta)) {
  if (delta_.size() != schema_.feature_count()) {
    throw ConfigError("Delta has " + std::to_string(delta_.size()) + " components, schema has " +
                      std::to_string(schema_.feature_count()) + " features");
  }
  groups_.reserve(groups.size());
  for (auto& g : groups) add(std::move(g));
}

void GroupStore::add(Group group) {
  if (group.center.size() != schema_.feature_count()) {
    throw ConfigError("group center has " + std::to_string(group.center.size()) + " coordinates, expected " +
                      std::to_string(schema_.feature_count()));
  }
  if (group.label < 1 || group.label > schema_.class_count()) {
    throw ConfigError("group label " + std::to_string(group.label) + " outside 1.." +
                      std::to_string(schema_.class_count()));
  }
  groups_.push_back(std::move(group));
}

bool covers(std::span<const double> x, std::span<const double> center, std::span<const double> delta) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (pulse_psi(x[j], center[j], delta[j]) == 0) return false;
  }
  return true;
}

int phi(std::span<const double> x, const Group& group, const DeltaVector& delta) {
  if (x.size() != group.center.size() || x.size() != delta.size()) throw ConfigError("phi: dimension mismatch");
  int product = 1;
  for (std::size_t j = 0; j < x.size(); ++j) product *= pulse_psi(x[j], group.center[j], delta[j]);
  return group.label * product;
}

GroupStore build_groups(const Dataset& train, const DeltaVector& delta) {
  if (train.empty()) throw ConfigError("cannot build groups from an empty dataset");
  std::vector<Group> groups;
  groups.reserve(train.size());
  for (const auto& s : train.samples()) groups.push_back(Group{s.features, s.label, GroupOrigin::initial});
  return GroupStore(train.schema(), delta, std::move(groups));
}

Prediction predict(const GroupStore& store, std::span<const double> x) {
  const std::size_t m = store.schema().feature_count();
  if (x.size() != m) throw ConfigError("predict: point has " + std::to_string(x.size()) + " coordinates");
  const auto delta = store.delta().values();

  Prediction p;
  p.counts.assign(static_cast<std::size_t>(store.schema().class_count()), 0);
  for (const auto& g : store.groups()) {
    if (covers(x, g.center, delta)) ++p.counts[static_cast<std::size_t>(g.label - 1)];
  }
  int best = 0;
  for (std::size_t k = 0; k < p.counts.size(); ++k) {
    p.matched_groups += p.counts[k];
    if (p.counts[k] > best) {
      best = p.counts[k];
      p.label = static_cast<int>(k) + 1;
    }
  }
  return p;
}

void relearn(GroupStore& store, std::span<const double> x, int true_label) {
  store.add(Group{std::vector<double>(x.begin(), x.end()), true_label, GroupOrigin::relearned});
}

Evaluation evaluate(GroupStore& store, const Dataset& data, bool relearn_flag) {
  if (data.schema().feature_count() != store.schema().feature_count() ||
      data.schema().class_count() != store.schema().class_count()) {
    throw ConfigError("evaluate: dataset schema does not match the model");
  }
  Evaluation out;
  out.predictions.reserve(data.size());
  std::size_t correct = 0;
  for (const auto& s : data.samples()) {
    Prediction p = predict(store, s.features);
    out.error += label_error(s.label, p.label);
    if (p.label == s.label) ++correct;
    if (relearn_flag && p.label == kUnknownLabel) {
      relearn(store, s.features, s.label);
      ++out.relearned;
    }
    out.predictions.push_back(std::move(p));
  }
  out.accuracy = data.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(data.size());
  return out;
}

Evaluation evaluate(const GroupStore& store, const Dataset& data) {
  GroupStore copy = store;
  return evaluate(copy, data, false);
}

double fold_error(const Dataset& centers, const Dataset& validation, std::span<const double> delta,
                  bool relearn_flag) {
  GroupStore store = build_groups(centers, DeltaVector(std::vector<double>(delta.begin(), delta.end())));
  return evaluate(store, validation, relearn_flag).error;
}

namespace {

enum StreamTag : std::uint64_t { kHalves = 11, kFirstToSecond = 12, kSecondToFirst = 13 };

std::size_t count_duplicates(const Dataset& d) {
  std::set<std::vector<double>> seen;
  std::size_t dups = 0;
  for (const auto& s : d.samples()) {
    if (!seen.insert(s.features).second) ++dups;
  }
  return dups;
}

}  // namespace

SingFit train_sing(const Dataset& train, const SingTrainConfig& config) {
  const std::size_t m = train.schema().feature_count();
  if (train.size() < 2) throw ConfigError("train_sing needs at least two samples");
  const auto present = train.class_counts();
  if (std::count_if(present.begin(), present.end(), [](std::size_t c) { return c > 0; }) < 2) {
    throw ConfigError("train_sing needs at least two classes");
  }

  std::vector<double> delta_max = config.delta_max;
  if (delta_max.size() == 1 && m > 1) delta_max.assign(m, delta_max.front());
  if (delta_max.size() != m) throw ConfigError("delta_max must have one value or one per feature");
  SearchDomain domain{std::vector<double>(m, 0.0), delta_max};
  domain.validate();

  Halves halves = halve(train, derive_seed(config.seed, {kHalves}));

  SingFit fit{DeltaVector(std::vector<double>(m, 1.0)), {}};
  auto& report = fit.report;
  report.warnings = halves.warnings;
  report.half_sizes[0] = halves.first.size();
  report.half_sizes[1] = halves.second.size();

  auto run = [&](const Dataset& centers, const Dataset& validation, std::uint64_t tag) {
    Objective objective = [&](std::span<const double> delta) {
      return fold_error(centers, validation, delta, config.relearn_during_fit);
    };
    MostConfig most = config.most;
    most.seed = derive_seed(config.seed, {tag});
    return optimize(objective, domain, most);
  };

  report.optimize_first_to_second = run(halves.first, halves.second, kFirstToSecond);
  report.optimize_second_to_first = run(halves.second, halves.first, kSecondToFirst);
  report.delta_first_to_second = report.optimize_first_to_second.best_point;
  report.delta_second_to_first = report.optimize_second_to_first.best_point;
  report.error_first_to_second = report.optimize_first_to_second.best_value;
  report.error_second_to_first = report.optimize_second_to_first.best_value;

  std::vector<double> final_delta(m);
  for (std::size_t j = 0; j < m; ++j) {
    final_delta[j] = std::max(report.delta_first_to_second[j], report.delta_second_to_first[j]);
  }
  fit.delta = DeltaVector(std::move(final_delta));

  report.teaching_accuracy = evaluate(build_groups(train, fit.delta), train).accuracy;
  report.duplicate_groups = count_duplicates(train);
  return fit;
}

}  // namespace sing
