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

#ifndef PITNAV_MONTE_CARLO_HPP_
#define PITNAV_MONTE_CARLO_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "pitnav/config.hpp"
#include "pitnav/gridworld.hpp"
#include "pitnav/simulation.hpp"

namespace pitnav {

struct RunResult {
  int run = 0;
  std::uint64_t seed = 0;
  std::vector<EpisodeRecord> episodes;
};

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

SummaryStats Summarize(std::vector<double> values);

struct EpisodeAggregate {
  int episode = 0;
  SummaryStats steps;
  // Agent-averaged P_MB of each run.
  SummaryStats pmb;
  double success_rate = 0.0;
};

// Run k uses seed cfg.seed + k. Runs execute on an OpenMP team; the result
// vector is ordered by run index regardless of completion order.
std::vector<RunResult> RunMonteCarlo(const ExperimentConfig& cfg,
                                     std::shared_ptr<const GridMap> map);

// Same contract on the calling thread. Reference path for tests and benchmarks.
std::vector<RunResult> RunMonteCarloSerial(const ExperimentConfig& cfg,
                                           std::shared_ptr<const GridMap> map);

std::vector<EpisodeAggregate> Aggregate(const std::vector<RunResult>& runs);

}  // namespace pitnav

#endif  // PITNAV_MONTE_CARLO_HPP_
