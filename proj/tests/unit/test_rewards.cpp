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


#include <random>

#include "doctest.h"
#include "pitnav/rewards.hpp"
#include "test_support.hpp"

namespace pitnav {
namespace {

using testing::BundledMap;
using testing::RelClose;

TEST_SUITE("rewards") {

TEST_CASE("motivation reference values") {
  const MotivationParams p;
  CHECK(Motivation(p, 800.0, 0.0) == 0.0);
  CHECK(RelClose(Motivation(p, 400.0, 200.0), 0.30000000000000004));
  CHECK(RelClose(Motivation(p, 0.0, 800.0), 0.8));
  // Out-of-range inputs are clamped.
  CHECK(Motivation(p, -5.0, 1e6) == Motivation(p, 0.0, 800.0));
}

TEST_CASE("motivation rises as battery drains and time passes") {
  const MotivationParams p;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 800.0);
  for (int i = 0; i < 2000; ++i) {
    const double b = u(rng);
    const double t = u(rng);
    const double m = Motivation(p, b, t);
    CHECK(m >= 0.0);
    CHECK(m <= p.xi_battery + p.xi_time + 1e-15);
    CHECK(Motivation(p, b * 0.5, t) >= m);
    CHECK(Motivation(p, b, std::min(800.0, t + 10.0)) >= m);
  }
}

TEST_CASE("effective reward") {
  CHECK(RelClose(EffectiveReward(1.0, 0.5, 0.6), 0.7));
  CHECK(EffectiveReward(3.0, 0.0, 0.6) == 3.0);
  CHECK(EffectiveReward(3.0, 0.4, 0.0) == 3.0);
}

TEST_CASE("risk reward") {
  const RewardParams p;
  TransitionOutcome hit{{0, 0}, true, CollisionKind::kWall};
  TransitionOutcome free{{0, 1}, false, CollisionKind::kNone};
  CHECK(RiskReward(p, hit) == -1.2);
  CHECK(RiskReward(p, free) == 0.0);
}

TEST_CASE("pavlovian cue on the bundled map") {
  const GridMap& m = BundledMap();
  const RewardParams p;
  SUBCASE("entering a gate from outside") {
    const PavlovianReward r = PavlovianCue(p, m, {22, 8}, {23, 8});
    CHECK(r.r_gate == 8.0);
    CHECK(r.r_gd == 0.0);
  }
  SUBCASE("entering a gate from the lit room") {
    const PavlovianReward r = PavlovianCue(p, m, {24, 8}, {23, 8});
    CHECK(r.r_gate == 0.0);
    CHECK(r.r_gd == 0.0);
  }
  SUBCASE("entering gps-denied airspace") {
    const PavlovianReward r = PavlovianCue(p, m, {18, 5}, {19, 5});
    CHECK(r.r_gate == 0.0);
    CHECK(r.r_gd == -8.0);
  }
  SUBCASE("plain corridor") {
    const PavlovianReward r = PavlovianCue(p, m, {16, 2}, {16, 3});
    CHECK(r.r_gate == 0.0);
    CHECK(r.r_gd == 0.0);
  }
}

TEST_CASE("no gate cue ever starts from a line-of-sight cell") {
  const GridMap& m = BundledMap();
  const RewardParams p;
  for (int s = 0; s < m.num_cells(); ++s) {
    const Cell c = m.CellAt(s);
    if (m.IsWall(c) || !m.IsLos(c)) continue;
    for (Action a : kAllActions) {
      const Cell n = PredictedNext(m, c, a);
      CHECK(PavlovianCue(p, m, c, n).r_gate == 0.0);
    }
  }
}

TEST_CASE("total reward is the sum of its parts") {
  const RewardParams p;
  TransitionOutcome hit{{0, 0}, true, CollisionKind::kAgent};
  const RewardBreakdown b = TotalReward(p, 0.25, hit, {8.0, -8.0}, true);
  CHECK(b.r_rssi == 0.25);
  CHECK(b.r_risk == -1.2);
  CHECK(b.r_gate == 8.0);
  CHECK(b.r_gd == -8.0);
  CHECK(b.r_goal == 100.0);
  CHECK(RelClose(b.r_total, 0.25 - 1.2 + 100.0));
  const RewardBreakdown z = TotalReward(p, 0.0, {}, {}, false);
  CHECK(z.r_total == 0.0);
}

TEST_CASE("invalid reward settings") {
  RewardParams p;
  p.lambda_col = -1.0;
  CHECK_THROWS(p.Validate());
  MotivationParams mp;
  mp.b_max = 0.0;
  CHECK_THROWS(mp.Validate());
}

}  // TEST_SUITE

}  // namespace
}  // namespace pitnav
