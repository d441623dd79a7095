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

#ifndef PITNAV_PLANNER_HPP_
#define PITNAV_PLANNER_HPP_

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "pitnav/gridworld.hpp"
#include "pitnav/learners.hpp"

namespace pitnav {

struct StateAction {
  int state = 0;
  Action action = Action::kHover;
  friend constexpr bool operator==(StateAction, StateAction) = default;
};

// Last observed outcome of a (state, action) pair.
struct ModelEntry {
  Cell next;
  int next_state = 0;
  double reward = 0.0;
  int last_seen = 0;
  bool terminal = false;
};

// Deterministic tabular world model for Dyna-style planning. Entries persist
// for the agent's lifetime; the visited list covers the current episode only.
class TransitionModel {
 public:
  explicit TransitionModel(int num_states);

  // Overwrites the entry for (s, a) and appends the pair to the visited list
  // the first time it is seen this episode.
  void Record(int s, Action a, Cell next, int next_state, double reward, int step,
              bool terminal = false);

  const ModelEntry* Lookup(int s, Action a) const;
  const std::vector<StateAction>& visited() const { return visited_; }
  int num_entries() const { return num_entries_; }

  void StartEpisode();

 private:
  std::size_t Offset(int s, Action a) const {
    return static_cast<std::size_t>(s) * kNumActions + ActionIndex(a);
  }

  std::vector<std::optional<ModelEntry>> entries_;
  std::vector<std::uint8_t> seen_this_episode_;
  std::vector<StateAction> visited_;
  int num_entries_ = 0;
};

// K simulated TD updates of `q_mb` from pairs drawn uniformly from the visited
// list. Does nothing when the list is empty or K == 0.
void Plan(const TransitionModel& model, QTable& q_mb, int k, double alpha, double gamma,
          std::mt19937_64& rng);

// State prediction error in [0, 1]: 1 for an unseen pair, otherwise the
// Manhattan miss normalized by `d_max`.
double Spe(const TransitionModel& model, int s, Action a, Cell actual, int d_max);

// The reward prediction error is the model-free TD error itself.
inline double Rpe(double td_error) { return td_error; }

enum class ErrorCategory : int { kZero = 0, kNegative = 1, kPositive = 2 };

// |pe| <= zeta counts as a zero error.
ErrorCategory Categorize(double pe, double zeta);

enum class ControlSystem { kModelBased, kModelFree };

using Concentration = std::array<double, 3>;

inline constexpr double kReliabilityCap = 1e12;

struct ReliabilityState {
  Concentration lam_mb{1.0, 1.0, 1.0};
  Concentration lam_mf{1.0, 1.0, 1.0};
  double zeta_spe = 0.1;
  double zeta_rpe = 0.1;
  double epsilon = 1e-6;
  double p_mb = 0.5;
};

void ReliabilityUpdate(ReliabilityState& rel, ControlSystem system, ErrorCategory category);

// Squared mean over variance of the zero-error mass of a Dirichlet:
// lam0 (L + 1) / (L - lam0). Capped at kReliabilityCap when L == lam0.
double ReliabilityScore(const Concentration& lam);

double ArbitrationProbability(double chi_mb, double chi_mf, double epsilon);

// Recomputes rel.p_mb from the current concentrations.
double RefreshArbitration(ReliabilityState& rel);

ActionValues HybridQ(const QTable& q_mf, const QTable& q_mb, double p_mb, int s);

}  // namespace pitnav

#endif  // PITNAV_PLANNER_HPP_
