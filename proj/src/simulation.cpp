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

#include "pitnav/simulation.hpp"

#include <limits>

namespace pitnav {

namespace {

std::mt19937_64 MakeStream(std::uint64_t seed, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    tag};
  return std::mt19937_64(seq);
}

void Accumulate(RewardBreakdown& sum, const RewardBreakdown& r) {
  sum.r_rssi += r.r_rssi;
  sum.r_risk += r.r_risk;
  sum.r_gate += r.r_gate;
  sum.r_gd += r.r_gd;
  sum.r_goal += r.r_goal;
  sum.r_total += r.r_total;
}

}  // namespace

RunStreams RunStreams::FromSeed(std::uint64_t seed) {
  return {MakeStream(seed, 0x706f6c69), MakeStream(seed, 0x73686164), MakeStream(seed, 0x67707321),
          MakeStream(seed, 0x706c616e)};
}

AgentLearner::AgentLearner(int num_states, const PlannerParams& planner)
    : q_mf(num_states), q_mb(num_states), v(num_states), model(num_states) {
  reliability.lam_mb = {planner.prior, planner.prior, planner.prior};
  reliability.lam_mf = reliability.lam_mb;
  reliability.zeta_spe = planner.zeta_spe;
  reliability.zeta_rpe = planner.zeta_rpe;
  reliability.epsilon = planner.epsilon;
  RefreshArbitration(reliability);
}

Simulation::Simulation(const ExperimentConfig& cfg, std::shared_ptr<const GridMap> map)
    : cfg_(cfg), map_(std::move(map)), streams_(RunStreams::FromSeed(cfg.seed)) {
  cfg_.Validate();
  if (static_cast<int>(map_->agent_starts().size()) != cfg_.n_agents) {
    throw ConfigError("sim.n_agents=" + std::to_string(cfg_.n_agents) + " but the map defines " +
                      std::to_string(map_->agent_starts().size()) + " agent starts");
  }
  learners_.reserve(cfg_.n_agents);
  for (int i = 0; i < cfg_.n_agents; ++i) learners_.emplace_back(map_->num_cells(), cfg_.planner);
  p_r_max_dbm_ = MaxReceivedPowerDbm(cfg_.radio);
}

double Simulation::Motivation(const AgentState& s) const {
  if (!cfg_.motivation_enabled) return 0.0;
  return pitnav::Motivation(cfg_.motivation, s.battery, s.elapsed);
}

ActionValues Simulation::ScoresConst(int agent, Cell pos, double p_mb) const {
  const AgentLearner& l = learners_[agent];
  const int s = map_->Index(pos);
  const ActionValues q_eff =
      UsesModelBased(cfg_.variant) ? HybridQ(l.q_mf, l.q_mb, p_mb, s) : l.q_mf.RowCopy(s);
  if (!UsesPavlovianBias(cfg_.variant)) return q_eff;
  return PolicyLogits(q_eff, l.v, *map_, pos, cfg_.learn.beta);
}

ActionValues Simulation::Scores(int agent, Cell pos, double p_mb) {
  if (UsesPavlovianBias(cfg_.variant)) ++counters_.pavlovian_bias_evals;
  return ScoresConst(agent, pos, p_mb);
}

Simulation::Measured Simulation::Measure(Cell pos, std::mt19937_64& shadow_rng,
                                         std::mt19937_64& gps_rng) const {
  const GridMap& map = *map_;
  const RadioConfig& radio = cfg_.radio;
  const bool los = map.IsLos(pos);
  double shadow = 0.0;
  if (radio.shadowing_sigma_db > 0.0) {
    std::normal_distribution<double> n(0.0, radio.shadowing_sigma_db);
    shadow = n(shadow_rng);
  }
  Measured m;
  m.p_r_dbm = ReceivedPowerDbm(radio, map.Distance(pos, map.target()), los,
                               los ? 0.0 : radio.wall_loss_db, shadow);
  const double var_range = RangingVariance(radio, SnrLinear(radio, m.p_r_dbm));
  const Mat2 gps_cov = GpsCovariance(cfg_.gps, map.IsGpsDenied(pos));
  const auto [px, py] = map.Position(pos);
  const auto [tx, ty] = map.Position(map.target());
  const Vec2 target{tx, ty};
  const Vec2 est = NoisyAgentPosition({px, py}, gps_cov, gps_rng);
  if (Norm(target - est) > 0.0) m.fim = AgentFim(target, est, var_range, gps_cov);
  return m;
}

bool Simulation::RecordTrajectory(int episode) const {
  return episode == 1 || episode == cfg_.n_episodes || episode % cfg_.trajectory_stride == 0;
}

EpisodeRecord Simulation::RunEpisode(int episode) {
  const GridMap& map = *map_;
  const int n = cfg_.n_agents;
  const bool model_based = UsesModelBased(cfg_.variant);
  const double alpha = ScheduleValue(cfg_.learn.alpha, episode - 1);
  const double kappa0 = ScheduleValue(cfg_.learn.kappa, episode - 1);
  const double gamma = cfg_.learn.gamma;
  const int d_max = map.MaxManhattan();
  const bool record = RecordTrajectory(episode);

  EpisodeRecord rec;
  rec.episode = episode;
  rec.alpha = alpha;
  rec.kappa0 = kappa0;
  rec.mean_pmb.assign(n, 0.0);
  rec.reward_sums.assign(n, RewardBreakdown{});
  if (record) {
    rec.trajectories.resize(n);
    if (model_based) rec.pmb_trace.resize(n);
  }

  std::vector<AgentState> agents(n);
  std::vector<Action> actions(n);
  std::vector<std::uint8_t> gate_paid(n, 0);
  Occupancy occupied(map);
  for (int i = 0; i < n; ++i) {
    agents[i] = {map.agent_starts()[i], cfg_.motivation.b_max, 0};
    occupied.Add(agents[i].pos);
    learners_[i].model.StartEpisode();
    if (record) rec.trajectories[i].push_back(agents[i].pos);
  }
  for (int i = 0; i < n; ++i) {
    actions[i] = SoftmaxSelect(Scores(i, agents[i].pos, learners_[i].reliability.p_mb), kappa0,
                               Motivation(agents[i]), streams_.policy);
  }

  std::vector<Cell> prev(n);
  std::vector<TransitionOutcome> outcomes(n);
  std::vector<Measured> measured(n);
  std::vector<FisherInfo> fims(n);
  bool done = false;
  double peb = std::numeric_limits<double>::infinity();
  int t = 0;
  while (t < cfg_.n_steps && !done) {
    ++t;
    // Sequential moves: each agent sees the cells already taken this step.
    for (int i = 0; i < n; ++i) {
      AgentState& a = agents[i];
      prev[i] = a.pos;
      occupied.Remove(a.pos);
      outcomes[i] = StepAgent(map, occupied, a, actions[i], cfg_.reward.d_safe);
      a.pos = outcomes[i].next_pos;
      occupied.Add(a.pos);
      const double cost = actions[i] == Action::kHover ? cfg_.hover_cost : cfg_.move_cost;
      a.battery = std::max(0.0, a.battery - cost);
      a.elapsed += 1;
      measured[i] = Measure(a.pos, streams_.shadowing, streams_.gps);
      fims[i] = measured[i].fim;
    }
    const PebResult peb_result = Peb(TotalFim(fims), cfg_.cond_threshold);
    peb = peb_result.peb;
    done = MissionSuccess(peb, cfg_.peb_star);

    for (int i = 0; i < n; ++i) {
      AgentLearner& l = learners_[i];
      const AgentState& a = agents[i];
      const int s = map.Index(prev[i]);
      const int s_next = map.Index(a.pos);
      const double motivation = Motivation(a);

      PavlovianReward pav = PavlovianCue(cfg_.reward, map, prev[i], a.pos);
      if (pav.r_gate != 0.0) {
        if (cfg_.reward.gate_once_per_episode && gate_paid[i]) {
          pav.r_gate = 0.0;
        } else {
          gate_paid[i] = 1;
          ++rec.gate_rewards;
        }
      }
      const RewardBreakdown reward =
          TotalReward(cfg_.reward, RssiReward(cfg_.radio, measured[i].p_r_dbm), outcomes[i], pav,
                      done);
      const double r_eff = EffectiveReward(reward.r_total, motivation, cfg_.motivation.phi);

      VUpdate(l.v, s, s_next, r_eff, alpha, gamma, done);
      const double td = TdErrorQ(l.q_mf, s, actions[i], s_next, r_eff, gamma, done);
      QUpdate(l.q_mf, s, actions[i], td, alpha);

      double spe = 0.0;
      if (model_based) {
        spe = Spe(l.model, s, actions[i], a.pos, d_max);
        // Direct update from the real transition, then K simulated ones.
        QUpdate(l.q_mb, s, actions[i],
                TdErrorQ(l.q_mb, s, actions[i], s_next, r_eff, gamma, done), alpha);
        l.model.Record(s, actions[i], a.pos, s_next, r_eff, t, done);
        Plan(l.model, l.q_mb, cfg_.planner.k, alpha, gamma, streams_.planning);
        ++counters_.planning_calls;
        ReliabilityUpdate(l.reliability, ControlSystem::kModelBased,
                          Categorize(spe, l.reliability.zeta_spe));
        ReliabilityUpdate(l.reliability, ControlSystem::kModelFree,
                          Categorize(Rpe(td), l.reliability.zeta_rpe));
        RefreshArbitration(l.reliability);
      }
      const double p_mb = model_based ? l.reliability.p_mb : 0.0;

      const Action taken = actions[i];
      actions[i] = SoftmaxSelect(Scores(i, a.pos, p_mb), kappa0, motivation, streams_.policy);

      if (outcomes[i].collided) ++rec.collisions;
      if (map.IsGpsDenied(a.pos)) ++rec.gps_denied_steps;
      Accumulate(rec.reward_sums[i], reward);
      rec.mean_pmb[i] += p_mb;
      if (record) {
        rec.trajectories[i].push_back(a.pos);
        if (model_based) rec.pmb_trace[i].push_back(p_mb);
      }
      if (observer_) {
        StepInfo info;
        info.episode = episode;
        info.step = t;
        info.agent = i;
        info.from = prev[i];
        info.to = a.pos;
        info.action = taken;
        info.outcome = outcomes[i];
        info.reward = reward;
        info.motivation = motivation;
        info.kappa = kappa0 / (1.0 + motivation);
        info.r_eff = r_eff;
        info.td_error = td;
        info.spe = spe;
        info.p_mb = p_mb;
        info.peb = peb;
        info.done = done;
        observer_(info);
      }
    }
  }

  rec.steps = t;
  rec.success = done;
  rec.final_peb = peb;
  for (double& m : rec.mean_pmb) m /= t;
  return rec;
}

std::vector<EpisodeRecord> Simulation::RunTraining() {
  std::vector<EpisodeRecord> records;
  records.reserve(cfg_.n_episodes);
  for (int ep = 1; ep <= cfg_.n_episodes; ++ep) records.push_back(RunEpisode(ep));
  return records;
}

RolloutResult Simulation::GreedyRollout(std::uint64_t noise_seed) const {
  const GridMap& map = *map_;
  const int n = cfg_.n_agents;
  RunStreams streams = RunStreams::FromSeed(noise_seed ^ 0x9e3779b97f4a7c15ULL);

  RolloutResult out;
  out.trajectories.resize(n);
  std::vector<AgentState> agents(n);
  Occupancy occupied(map);
  for (int i = 0; i < n; ++i) {
    agents[i] = {map.agent_starts()[i], cfg_.motivation.b_max, 0};
    occupied.Add(agents[i].pos);
    out.trajectories[i].push_back(agents[i].pos);
  }
  std::vector<FisherInfo> fims(n);
  double peb = std::numeric_limits<double>::infinity();
  int t = 0;
  bool done = false;
  while (t < cfg_.n_steps && !done) {
    ++t;
    for (int i = 0; i < n; ++i) {
      AgentState& a = agents[i];
      const double p_mb = UsesModelBased(cfg_.variant) ? learners_[i].reliability.p_mb : 0.0;
      const Action act = GreedyAction(ScoresConst(i, a.pos, p_mb));
      occupied.Remove(a.pos);
      a.pos = StepAgent(map, occupied, a, act, cfg_.reward.d_safe).next_pos;
      occupied.Add(a.pos);
      fims[i] = Measure(a.pos, streams.shadowing, streams.gps).fim;
      out.trajectories[i].push_back(a.pos);
    }
    peb = Peb(TotalFim(fims), cfg_.cond_threshold).peb;
    done = MissionSuccess(peb, cfg_.peb_star);
  }
  out.steps = t;
  out.success = done;
  out.final_peb = peb;
  return out;
}

std::vector<EpisodeRecord> RunTraining(const ExperimentConfig& cfg) {
  auto map = std::make_shared<const GridMap>(LoadMapFile(cfg.map_path, cfg.cell_size));
  Simulation sim(cfg, map);
  return sim.RunTraining();
}

}  // namespace pitnav
