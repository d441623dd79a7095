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

#include "pitnav/rewards.hpp"

#include <algorithm>
#include <stdexcept>

namespace pitnav {

void MotivationParams::Validate() const {
  if (xi_battery < 0.0 || xi_time < 0.0 || phi < 0.0) {
    throw std::invalid_argument("motivation: weights must be >= 0");
  }
  if (!(b_max > 0.0) || !(t_max > 0.0)) {
    throw std::invalid_argument("motivation: b_max and t_max must be > 0");
  }
}

void RewardParams::Validate() const {
  if (lambda_col < 0.0 || r_goal < 0.0 || r_cue < 0.0 || d_safe < 0.0) {
    throw std::invalid_argument("reward: constants must be >= 0");
  }
}

double Motivation(const MotivationParams& p, double battery, double elapsed) {
  const double b = std::clamp(battery, 0.0, p.b_max) / p.b_max;
  const double tau = std::clamp(elapsed, 0.0, p.t_max) / p.t_max;
  return p.xi_battery * (1.0 - b) + p.xi_time * tau;
}

double RiskReward(const RewardParams& p, const TransitionOutcome& outcome) {
  return outcome.collided ? -p.lambda_col : 0.0;
}

PavlovianReward PavlovianCue(const RewardParams& p, const GridMap& map, Cell s, Cell s_next) {
  PavlovianReward r;
  if (!map.IsLos(s) && map.IsGate(s_next)) r.r_gate = p.r_cue;
  if (map.IsGpsDenied(s_next)) r.r_gd = -p.r_cue;
  return r;
}

RewardBreakdown TotalReward(const RewardParams& p, double r_rssi,
                            const TransitionOutcome& outcome, PavlovianReward pav,
                            bool goal_hit) {
  RewardBreakdown b;
  b.r_rssi = r_rssi;
  b.r_risk = RiskReward(p, outcome);
  b.r_gate = pav.r_gate;
  b.r_gd = pav.r_gd;
  b.r_goal = goal_hit ? p.r_goal : 0.0;
  b.r_total = b.r_rssi + b.r_risk + b.r_gate + b.r_gd + b.r_goal;
  return b;
}

}  // namespace pitnav
