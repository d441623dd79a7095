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


#include <memory>
#include <numeric>

#include "doctest.h"
#include "pitnav/monte_carlo.hpp"
#include "test_support.hpp"

namespace pitnav {
namespace {

using testing::ArenaConfig;
using testing::ArenaMap;

TEST_SUITE("monte_carlo") {

TEST_CASE("summary statistics") {
  const SummaryStats s = Summarize({4.0, 1.0, 3.0, 2.0});
  CHECK(s.mean == 2.5);
  CHECK(s.median == 2.5);
  CHECK(s.min == 1.0);
  CHECK(s.max == 4.0);
  CHECK(Summarize({7.0, 1.0, 3.0}).median == 3.0);
  const SummaryStats empty = Summarize({});
  CHECK(empty.mean == 0.0);
  CHECK(empty.max == 0.0);
}

TEST_CASE("parallel and serial runs agree exactly") {
  for (Variant v : {Variant::kPitMF, Variant::kInstrumentalMFMB}) {
    ExperimentConfig cfg = ArenaConfig(40);
    cfg.variant = v;
    cfg.n_monte_carlo = 5;
    const auto par = RunMonteCarlo(cfg, ArenaMap());
    const auto ser = RunMonteCarloSerial(cfg, ArenaMap());
    REQUIRE(par.size() == ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
      CHECK(par[k].run == int(k));
      CHECK(par[k].seed == cfg.seed + k);
      CHECK(par[k].seed == ser[k].seed);
      REQUIRE(par[k].episodes.size() == ser[k].episodes.size());
      for (std::size_t e = 0; e < par[k].episodes.size(); ++e) {
        const auto& a = par[k].episodes[e];
        const auto& b = ser[k].episodes[e];
        CHECK(a.steps == b.steps);
        CHECK(a.final_peb == b.final_peb);
        CHECK(a.mean_pmb == b.mean_pmb);
        CHECK(a.trajectories == b.trajectories);
      }
    }
  }
}

TEST_CASE("a single run aggregates to itself") {
  ExperimentConfig cfg = ArenaConfig(5);
  cfg.variant = Variant::kPitMFMB;
  cfg.n_monte_carlo = 1;
  const auto runs = RunMonteCarloSerial(cfg, ArenaMap());
  const auto agg = Aggregate(runs);
  REQUIRE(agg.size() == runs[0].episodes.size());
  for (std::size_t e = 0; e < agg.size(); ++e) {
    const EpisodeRecord& r = runs[0].episodes[e];
    const double pmb =
        std::accumulate(r.mean_pmb.begin(), r.mean_pmb.end(), 0.0) / r.mean_pmb.size();
    CHECK(agg[e].episode == r.episode);
    CHECK(agg[e].steps.mean == r.steps);
    CHECK(agg[e].steps.median == r.steps);
    CHECK(agg[e].steps.min == r.steps);
    CHECK(agg[e].pmb.mean == doctest::Approx(pmb));
    CHECK(agg[e].success_rate == (r.success ? 1.0 : 0.0));
  }
}

TEST_CASE("aggregate bounds") {
  ExperimentConfig cfg = ArenaConfig(9);
  cfg.n_monte_carlo = 4;
  const auto agg = Aggregate(RunMonteCarlo(cfg, ArenaMap()));
  for (const auto& a : agg) {
    CHECK(a.steps.min <= a.steps.median);
    CHECK(a.steps.median <= a.steps.max);
    CHECK(a.steps.min <= a.steps.mean);
    CHECK(a.steps.mean <= a.steps.max);
    CHECK(a.success_rate >= 0.0);
    CHECK(a.success_rate <= 1.0);
  }
  CHECK(Aggregate({}).empty());
}

TEST_CASE("errors inside a run propagate") {
  ExperimentConfig cfg = ArenaConfig();
  cfg.n_agents = 4;
  cfg.n_monte_carlo = 3;
  CHECK_THROWS_AS(RunMonteCarlo(cfg, ArenaMap()), ConfigError);
}

}  // TEST_SUITE

}  // namespace
}  // namespace pitnav
