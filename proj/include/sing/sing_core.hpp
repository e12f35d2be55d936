#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sing/dataset.hpp"
#include "sing/most.hpp"

namespace sing {

// Per-feature half-widths of the group boxes. Every component is strictly
// positive and finite; the constructor enforces it.
class DeltaVector {
 public:
  explicit DeltaVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }

  bool operator==(const DeltaVector&) const = default;

 private:
  std::vector<double> values_;
};

enum class GroupOrigin { initial, relearned };

struct Group {
  std::vector<double> center;
  int label = 0;
  GroupOrigin origin = GroupOrigin::initial;

  bool operator==(const Group&) const = default;
};

// The trained model: one box per remembered sample, all sharing one Delta.
class GroupStore {
 public:
  GroupStore(Schema schema, DeltaVector delta, std::vector<Group> groups = {});

  const Schema& schema() const { return schema_; }
  const DeltaVector& delta() const { return delta_; }
  std::span<const Group> groups() const { return groups_; }
  std::size_t size() const { return groups_.size(); }

  // Validates center length and label range.
  void add(Group group);

 private:
  Schema schema_;
  DeltaVector delta_;
  std::vector<Group> groups_;
};

struct Prediction {
  int label = 0;            // 0 is the Unknown sentinel
  std::vector<int> counts;  // counts[k - 1] = matching groups of class k
  int matched_groups = 0;
};

inline constexpr int kUnknownLabel = 0;

// Unit step with U(0) = 1.
inline int unit_step(double x) { return x >= 0.0 ? 1 : 0; }

// 1 on [center - delta, center + delta), 0 elsewhere.
inline int pulse_psi(double x, double center, double delta) {
  return unit_step(x - (center - delta)) - unit_step(x - (center + delta));
}

// True when every coordinate of x falls inside the group's box.
bool covers(std::span<const double> x, std::span<const double> center, std::span<const double> delta);

// Group label where the box covers x, 0 elsewhere.
int phi(std::span<const double> x, const Group& group, const DeltaVector& delta);

GroupStore build_groups(const Dataset& train, const DeltaVector& delta);

// Count vote over all covering groups; ties go to the smallest class id.
Prediction predict(const GroupStore& store, std::span<const double> x);

// Appends x as a new group carrying true_label.
void relearn(GroupStore& store, std::span<const double> x, int true_label);

// Half the squared difference of class codes; Unknown counts as code 0.
inline double label_error(int truth, int predicted) {
  const double d = static_cast<double>(truth - predicted);
  return 0.5 * d * d;
}

struct Evaluation {
  double accuracy = 0.0;
  double error = 0.0;
  std::vector<Prediction> predictions;
  std::size_t relearned = 0;
};

// Scores samples in dataset order. With relearn_flag, every Unknown sample
// is appended to the store right after it is scored.
Evaluation evaluate(GroupStore& store, const Dataset& data, bool relearn_flag);
Evaluation evaluate(const GroupStore& store, const Dataset& data);

struct SingTrainConfig {
  // Upper end of the search interval (0, delta_max[j]) per feature. A single
  // value is broadcast to every feature.
  std::vector<double> delta_max{1.0};
  MostConfig most;
  bool relearn_during_fit = false;
  // Drives the halving and both optimizer runs; most.seed is ignored.
  std::uint64_t seed = 0;
};

struct SingTrainReport {
  std::vector<double> delta_first_to_second;  // fitted on half I, validated on half II
  std::vector<double> delta_second_to_first;  // swapped roles
  OptimizeReport optimize_first_to_second;
  OptimizeReport optimize_second_to_first;
  double error_first_to_second = 0.0;  // fold error at the fold's own optimum
  double error_second_to_first = 0.0;
  double teaching_accuracy = 0.0;      // final Delta, groups from all of train, scored on train
  std::size_t duplicate_groups = 0;    // training rows identical to an earlier row
  std::size_t half_sizes[2] = {0, 0};
  std::vector<std::string> warnings;
};

struct SingFit {
  DeltaVector delta;
  SingTrainReport report;
};

// Error of a store built from `centers` with the given Delta, scored on
// `validation`. This is the quantity the optimizer minimises.
double fold_error(const Dataset& centers, const Dataset& validation, std::span<const double> delta,
                  bool relearn_flag);

SingFit train_sing(const Dataset& train, const SingTrainConfig& config);

}  // namespace sing
