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

#include "pitnav/monte_carlo.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pitnav {

namespace {

RunResult RunOne(const ExperimentConfig& base, const std::shared_ptr<const GridMap>& map, int k) {
  ExperimentConfig cfg = base;
  cfg.seed = base.seed + static_cast<std::uint64_t>(k);
  Simulation sim(cfg, map);
  return {k, cfg.seed, sim.RunTraining()};
}

}  // namespace

SummaryStats Summarize(std::vector<double> values) {
  SummaryStats s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  s.min = values.front();
  s.max = values.back();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  s.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return s;
}

std::vector<RunResult> RunMonteCarlo(const ExperimentConfig& cfg,
                                     std::shared_ptr<const GridMap> map) {
  cfg.Validate();
  const int runs = cfg.n_monte_carlo;
  std::vector<RunResult> results(runs);
  std::vector<std::exception_ptr> errors(runs);

#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < runs; ++k) {
    try {
      results[k] = RunOne(cfg, map, k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<RunResult> RunMonteCarloSerial(const ExperimentConfig& cfg,
                                           std::shared_ptr<const GridMap> map) {
  cfg.Validate();
  std::vector<RunResult> results;
  results.reserve(cfg.n_monte_carlo);
  for (int k = 0; k < cfg.n_monte_carlo; ++k) results.push_back(RunOne(cfg, map, k));
  return results;
}

std::vector<EpisodeAggregate> Aggregate(const std::vector<RunResult>& runs) {
  std::vector<EpisodeAggregate> out;
  if (runs.empty()) return out;
  std::size_t n_episodes = runs.front().episodes.size();
  for (const auto& r : runs) n_episodes = std::min(n_episodes, r.episodes.size());

  out.reserve(n_episodes);
  std::vector<double> steps(runs.size());
  std::vector<double> pmb(runs.size());
  for (std::size_t e = 0; e < n_episodes; ++e) {
    double successes = 0.0;
    for (std::size_t k = 0; k < runs.size(); ++k) {
      const EpisodeRecord& rec = runs[k].episodes[e];
      steps[k] = rec.steps;
      const auto& m = rec.mean_pmb;
      pmb[k] = m.empty() ? 0.0 : std::accumulate(m.begin(), m.end(), 0.0) / m.size();
      successes += rec.success ? 1.0 : 0.0;
    }
    EpisodeAggregate agg;
    agg.episode = runs.front().episodes[e].episode;
    agg.steps = Summarize(steps);
    agg.pmb = Summarize(pmb);
    agg.success_rate = successes / runs.size();
    out.push_back(agg);
  }
  return out;
}

}  // namespace pitnav
