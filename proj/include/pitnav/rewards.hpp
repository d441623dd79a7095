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

#ifndef PITNAV_REWARDS_HPP_
#define PITNAV_REWARDS_HPP_

#include "pitnav/gridworld.hpp"

namespace pitnav {

// Internal drive: battery deficit plus elapsed-time urgency.
struct MotivationParams {
  double xi_battery = 0.4;
  double xi_time = 0.4;
  double b_max = 800.0;
  double t_max = 800.0;
  double phi = 0.6;
  void Validate() const;
};

struct RewardParams {
  double lambda_col = 1.2;
  double r_goal = 100.0;
  double r_cue = 8.0;
  double d_safe = 1.0;
  // Pay the gate cue only on an agent's first qualifying entry per episode.
  bool gate_once_per_episode = true;
  void Validate() const;
};

struct RewardBreakdown {
  double r_rssi = 0.0;
  double r_risk = 0.0;
  double r_gate = 0.0;
  double r_gd = 0.0;
  double r_goal = 0.0;
  double r_total = 0.0;
};

struct PavlovianReward {
  double r_gate = 0.0;
  double r_gd = 0.0;
};

// Inputs outside [0, b_max] and [0, t_max] are clamped.
double Motivation(const MotivationParams& p, double battery, double elapsed);

double RiskReward(const RewardParams& p, const TransitionOutcome& outcome);

PavlovianReward PavlovianCue(const RewardParams& p, const GridMap& map, Cell s, Cell s_next);

RewardBreakdown TotalReward(const RewardParams& p, double r_rssi,
                            const TransitionOutcome& outcome, PavlovianReward pav,
                            bool goal_hit);

// Reward as seen by every TD error: r - phi * M.
inline double EffectiveReward(double r_total, double motivation, double phi) {
  return r_total - phi * motivation;
}

}  // namespace pitnav

#endif  // PITNAV_REWARDS_HPP_
