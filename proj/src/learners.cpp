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

#include "pitnav/learners.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pitnav {

ActionValues QTable::RowCopy(int s) const {
  ActionValues out;
  const auto row = Row(s);
  std::copy(row.begin(), row.end(), out.begin());
  return out;
}

double QTable::MaxValue(int s) const {
  const auto row = Row(s);
  return *std::max_element(row.begin(), row.end());
}

double ScheduleValue(const Schedule& sched, int episode) {
  return std::max(sched.floor, sched.initial * std::pow(sched.decay, episode));
}

void LearnParams::Validate() const {
  if (!(alpha.initial > 0.0 && alpha.initial <= 1.0) || !(alpha.floor > 0.0 && alpha.floor <= 1.0)) {
    throw std::invalid_argument("learn: alpha must lie in (0, 1]");
  }
  if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("learn: gamma must lie in [0, 1]");
  if (!(kappa.initial > 0.0) || !(kappa.floor > 0.0)) {
    throw std::invalid_argument("learn: kappa must be > 0");
  }
  if (beta < 0.0) throw std::invalid_argument("learn: beta must be >= 0");
}

double TdErrorQ(const QTable& q, int s, Action a, int s_next, double r_eff, double gamma,
                bool terminal) {
  const double bootstrap = terminal ? 0.0 : gamma * q.MaxValue(s_next);
  return r_eff + bootstrap - q.at(s, a);
}

void QUpdate(QTable& q, int s, Action a, double delta, double alpha) {
  q.at(s, a) += alpha * delta;
}

double VUpdate(VTable& v, int s, int s_next, double r_eff, double alpha, double gamma,
               bool terminal) {
  const double bootstrap = terminal ? 0.0 : gamma * v.at(s_next);
  const double delta = r_eff + bootstrap - v.at(s);
  v.at(s) += alpha * delta;
  return delta;
}

double PavlovianBias(const VTable& v, const GridMap& map, Cell s, Action a) {
  const Cell next = PredictedNext(map, s, a);
  const double mag = std::abs(v.at(map.Index(s)));
  if (!map.IsLos(s) && map.IsGate(next)) return mag;
  if (map.IsGpsDenied(next)) return -mag;
  return 0.0;
}

ActionValues PolicyLogits(const ActionValues& q_eff, const VTable& v, const GridMap& map,
                          Cell s, double beta) {
  ActionValues omega = q_eff;
  if (beta == 0.0) return omega;
  for (Action a : kAllActions) {
    omega[ActionIndex(a)] += beta * PavlovianBias(v, map, s, a);
  }
  return omega;
}

ActionValues SoftmaxProbabilities(const ActionValues& scores, double kappa) {
  const double top = *std::max_element(scores.begin(), scores.end());
  ActionValues p;
  double z = 0.0;
  for (int i = 0; i < kNumActions; ++i) {
    p[i] = std::exp((scores[i] - top) / kappa);
    z += p[i];
  }
  for (double& x : p) x /= z;
  return p;
}

Action SoftmaxSelect(const ActionValues& scores, double kappa0, double motivation,
                     std::mt19937_64& rng) {
  const double kappa = kappa0 / (1.0 + motivation);
  const ActionValues p = SoftmaxProbabilities(scores, kappa);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  double acc = 0.0;
  int last = 0;
  for (int i = 0; i < kNumActions; ++i) {
    if (p[i] <= 0.0) continue;
    acc += p[i];
    last = i;
    if (u < acc) return kAllActions[i];
  }
  // Rounding left acc just below u.
  return kAllActions[last];
}

Action GreedyAction(const ActionValues& scores) {
  int best = 0;
  for (int i = 1; i < kNumActions; ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return kAllActions[best];
}

}  // namespace pitnav
