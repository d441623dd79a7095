// Copyright 2026 The pitnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PITNAV_LEARNERS_HPP_
#define PITNAV_LEARNERS_HPP_

#include <array>
#include <random>
#include <span>
#include <vector>

#include "pitnav/gridworld.hpp"

namespace pitnav {

using ActionValues = std::array<double, kNumActions>;

// Tabular action values over (cell index, action), zero-initialized.
class QTable {
 public:
  explicit QTable(int num_states) : values_(static_cast<std::size_t>(num_states) * kNumActions, 0.0) {}

  int num_states() const { return static_cast<int>(values_.size() / kNumActions); }

  double& at(int s, Action a) { return values_[Offset(s) + ActionIndex(a)]; }
  double at(int s, Action a) const { return values_[Offset(s) + ActionIndex(a)]; }

  std::span<const double, kNumActions> Row(int s) const {
    return std::span<const double, kNumActions>(values_.data() + Offset(s), kNumActions);
  }
  ActionValues RowCopy(int s) const;
  double MaxValue(int s) const;

  const std::vector<double>& raw() const { return values_; }
  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  std::size_t Offset(int s) const { return static_cast<std::size_t>(s) * kNumActions; }
  std::vector<double> values_;
};

// Tabular state values (Pavlovian V), zero-initialized.
class VTable {
 public:
  explicit VTable(int num_states) : values_(num_states, 0.0) {}

  int num_states() const { return static_cast<int>(values_.size()); }
  double& at(int s) { return values_[s]; }
  double at(int s) const { return values_[s]; }

  const std::vector<double>& raw() const { return values_; }
  friend bool operator==(const VTable&, const VTable&) = default;

 private:
  std::vector<double> values_;
};

// Per-episode exponential decay with a floor.
struct Schedule {
  double initial = 0.0;
  double decay = 1.0;
  double floor = 0.0;
};

double ScheduleValue(const Schedule& sched, int episode);

struct LearnParams {
  Schedule alpha{0.55, 0.9985, 0.09};
  double gamma = 0.98;
  Schedule kappa{1.2, 0.996, 0.03};
  double beta = 1.0;
  void Validate() const;
};

// TD error r_eff + gamma * max_a' q(s', a') - q(s, a). A terminal transition
// drops the bootstrap term.
double TdErrorQ(const QTable& q, int s, Action a, int s_next, double r_eff, double gamma,
                bool terminal = false);

void QUpdate(QTable& q, int s, Action a, double delta, double alpha);

// Pavlovian state-value update. Returns the TD error that was applied.
double VUpdate(VTable& v, int s, int s_next, double r_eff, double alpha, double gamma,
               bool terminal = false);

// Action-dependent Pavlovian bias: +|V(s)| for an NLOS state whose predicted
// successor is a gate, -|V(s)| when the successor is GPS-denied, else 0.
double PavlovianBias(const VTable& v, const GridMap& map, Cell s, Action a);

// Selection scores: q_eff(s, a) + beta * PavlovianBias(...).
ActionValues PolicyLogits(const ActionValues& q_eff, const VTable& v, const GridMap& map,
                          Cell s, double beta);

// Boltzmann probabilities at temperature `kappa`, max-shifted.
ActionValues SoftmaxProbabilities(const ActionValues& scores, double kappa);

// Samples from the softmax at temperature kappa0 / (1 + motivation).
Action SoftmaxSelect(const ActionValues& scores, double kappa0, double motivation,
                     std::mt19937_64& rng);

// Highest score; ties go to the lowest action index.
Action GreedyAction(const ActionValues& scores);

}  // namespace pitnav

#endif  // PITNAV_LEARNERS_HPP_
