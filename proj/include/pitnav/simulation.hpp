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

#ifndef PITNAV_SIMULATION_HPP_
#define PITNAV_SIMULATION_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "pitnav/config.hpp"
#include "pitnav/gridworld.hpp"
#include "pitnav/learners.hpp"
#include "pitnav/localization.hpp"
#include "pitnav/planner.hpp"
#include "pitnav/radio.hpp"
#include "pitnav/rewards.hpp"

namespace pitnav {

// Independent random streams of one run. Toggling one consumer (e.g.
// shadowing) never shifts the draws seen by another.
struct RunStreams {
  std::mt19937_64 policy;
  std::mt19937_64 shadowing;
  std::mt19937_64 gps;
  std::mt19937_64 planning;

  static RunStreams FromSeed(std::uint64_t seed);
};

// Everything an agent carries from one episode to the next.
struct AgentLearner {
  QTable q_mf;
  QTable q_mb;
  VTable v;
  TransitionModel model;
  ReliabilityState reliability;

  AgentLearner(int num_states, const PlannerParams& planner);
};

struct EpisodeRecord {
  int episode = 0;  // 1-based
  int steps = 0;
  bool success = false;
  double final_peb = 0.0;
  int collisions = 0;
  int gps_denied_steps = 0;
  int gate_rewards = 0;
  double alpha = 0.0;
  double kappa0 = 0.0;
  // Per agent: mean P_MB over the episode's steps (0 for model-free variants).
  std::vector<double> mean_pmb;
  // Per agent: reward components summed over the episode.
  std::vector<RewardBreakdown> reward_sums;
  // Per agent, only for recorded episodes: visited cells (steps + 1 entries)
  // and the P_MB trace (steps entries, model-based variants only).
  std::vector<std::vector<Cell>> trajectories;
  std::vector<std::vector<double>> pmb_trace;
};

// Per-agent, per-step view handed to an observer. Only used for auditing.
struct StepInfo {
  int episode = 0;
  int step = 0;
  int agent = 0;
  Cell from;
  Cell to;
  Action action = Action::kHover;
  TransitionOutcome outcome;
  RewardBreakdown reward;
  double motivation = 0.0;
  double kappa = 0.0;
  double r_eff = 0.0;
  double td_error = 0.0;
  double spe = 0.0;
  double p_mb = 0.0;
  double peb = 0.0;
  bool done = false;
};

struct RunCounters {
  std::uint64_t pavlovian_bias_evals = 0;
  std::uint64_t planning_calls = 0;
};

struct RolloutResult {
  int steps = 0;
  bool success = false;
  double final_peb = 0.0;
  std::vector<std::vector<Cell>> trajectories;
};

// One training run: a map, a configuration and the agents' persistent state.
// Strictly single-threaded; independent instances may run concurrently.
class Simulation {
 public:
  Simulation(const ExperimentConfig& cfg, std::shared_ptr<const GridMap> map);

  // Runs episode `episode` (1-based) with its scheduled alpha and kappa.
  EpisodeRecord RunEpisode(int episode);

  std::vector<EpisodeRecord> RunTraining();

  // Deterministic argmax policy from the current tables, without learning.
  RolloutResult GreedyRollout(std::uint64_t noise_seed = 0) const;

  const std::vector<AgentLearner>& learners() const { return learners_; }
  // For restoring saved tables before a rollout.
  std::vector<AgentLearner>& mutable_learners() { return learners_; }
  const GridMap& map() const { return *map_; }
  const ExperimentConfig& config() const { return cfg_; }
  const RunCounters& counters() const { return counters_; }

  void set_observer(std::function<void(const StepInfo&)> observer) {
    observer_ = std::move(observer);
  }

 private:
  struct Measured {
    double p_r_dbm = 0.0;
    FisherInfo fim;
  };

  ActionValues Scores(int agent, Cell pos, double p_mb);
  ActionValues ScoresConst(int agent, Cell pos, double p_mb) const;
  Measured Measure(Cell pos, std::mt19937_64& shadow_rng, std::mt19937_64& gps_rng) const;
  double Motivation(const AgentState& s) const;
  bool RecordTrajectory(int episode) const;

  ExperimentConfig cfg_;
  std::shared_ptr<const GridMap> map_;
  std::vector<AgentLearner> learners_;
  RunStreams streams_;
  RunCounters counters_;
  std::function<void(const StepInfo&)> observer_;
  double p_r_max_dbm_ = 0.0;
};

// Convenience: load the configured map and train.
std::vector<EpisodeRecord> RunTraining(const ExperimentConfig& cfg);

}  // namespace pitnav

#endif  // PITNAV_SIMULATION_HPP_
