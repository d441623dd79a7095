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

#include "pitnav/planner.hpp"

#include <algorithm>
#include <cmath>

namespace pitnav {

TransitionModel::TransitionModel(int num_states)
    : entries_(static_cast<std::size_t>(num_states) * kNumActions),
      seen_this_episode_(entries_.size(), 0) {}

void TransitionModel::Record(int s, Action a, Cell next, int next_state, double reward,
                             int step, bool terminal) {
  const std::size_t i = Offset(s, a);
  if (!entries_[i]) ++num_entries_;
  entries_[i] = ModelEntry{next, next_state, reward, step, terminal};
  if (!seen_this_episode_[i]) {
    seen_this_episode_[i] = 1;
    visited_.push_back({s, a});
  }
}

const ModelEntry* TransitionModel::Lookup(int s, Action a) const {
  const auto& e = entries_[Offset(s, a)];
  return e ? &*e : nullptr;
}

void TransitionModel::StartEpisode() {
  for (const auto& sa : visited_) seen_this_episode_[Offset(sa.state, sa.action)] = 0;
  visited_.clear();
}

void Plan(const TransitionModel& model, QTable& q_mb, int k, double alpha, double gamma,
          std::mt19937_64& rng) {
  const auto& visited = model.visited();
  if (visited.empty()) return;
  std::uniform_int_distribution<std::size_t> pick(0, visited.size() - 1);
  for (int step = 0; step < k; ++step) {
    const StateAction sa = visited[pick(rng)];
    const ModelEntry* e = model.Lookup(sa.state, sa.action);
    if (e == nullptr) continue;
    const double delta =
        TdErrorQ(q_mb, sa.state, sa.action, e->next_state, e->reward, gamma, e->terminal);
    QUpdate(q_mb, sa.state, sa.action, delta, alpha);
  }
}

double Spe(const TransitionModel& model, int s, Action a, Cell actual, int d_max) {
  const ModelEntry* e = model.Lookup(s, a);
  if (e == nullptr) return 1.0;
  return static_cast<double>(Manhattan(e->next, actual)) / d_max;
}

ErrorCategory Categorize(double pe, double zeta) {
  if (pe < -zeta) return ErrorCategory::kNegative;
  if (pe > zeta) return ErrorCategory::kPositive;
  return ErrorCategory::kZero;
}

void ReliabilityUpdate(ReliabilityState& rel, ControlSystem system, ErrorCategory category) {
  Concentration& lam = system == ControlSystem::kModelBased ? rel.lam_mb : rel.lam_mf;
  lam[static_cast<int>(category)] += 1.0;
}

double ReliabilityScore(const Concentration& lam) {
  const double total = lam[0] + lam[1] + lam[2];
  const double rest = total - lam[0];
  if (!(rest > 0.0)) return kReliabilityCap;
  return std::min(kReliabilityCap, lam[0] * (total + 1.0) / rest);
}

double ArbitrationProbability(double chi_mb, double chi_mf, double epsilon) {
  return chi_mb / (chi_mb + chi_mf + epsilon);
}

double RefreshArbitration(ReliabilityState& rel) {
  rel.p_mb = ArbitrationProbability(ReliabilityScore(rel.lam_mb), ReliabilityScore(rel.lam_mf),
                                    rel.epsilon);
  return rel.p_mb;
}

ActionValues HybridQ(const QTable& q_mf, const QTable& q_mb, double p_mb, int s) {
  ActionValues out;
  const auto mf = q_mf.Row(s);
  const auto mb = q_mb.Row(s);
  for (int i = 0; i < kNumActions; ++i) out[i] = (1.0 - p_mb) * mf[i] + p_mb * mb[i];
  return out;
}

}  // namespace pitnav
