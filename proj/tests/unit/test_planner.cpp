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
#include "pitnav/planner.hpp"
#include "test_support.hpp"

namespace pitnav {
namespace {

using testing::RelClose;

TEST_SUITE("planner") {

TEST_CASE("recording and lookup") {
  TransitionModel m(4);
  CHECK(m.Lookup(0, Action::kUp) == nullptr);
  m.Record(0, Action::kUp, {0, 1}, 2, 0.5, 1);
  m.Record(0, Action::kUp, {0, 1}, 2, 0.7, 2);
  m.Record(1, Action::kHover, {1, 0}, 1, -0.1, 3);
  CHECK(m.num_entries() == 2);
  REQUIRE(m.visited().size() == 2);
  const ModelEntry* e = m.Lookup(0, Action::kUp);
  REQUIRE(e != nullptr);
  CHECK(e->reward == 0.7);
  CHECK(e->last_seen == 2);
  CHECK(e->next_state == 2);
}

TEST_CASE("the visited list resets each episode but the model persists") {
  TransitionModel m(4);
  m.Record(0, Action::kUp, {0, 1}, 2, 0.5, 1);
  m.StartEpisode();
  CHECK(m.visited().empty());
  CHECK(m.Lookup(0, Action::kUp) != nullptr);
  m.Record(0, Action::kUp, {0, 1}, 2, 0.5, 1);
  CHECK(m.visited().size() == 1);
}

TEST_CASE("planning on a three-state chain") {
  TransitionModel m(3);
  m.Record(0, Action::kRight, {1, 0}, 1, 0.0, 1);
  m.Record(1, Action::kRight, {2, 0}, 2, 1.0, 2, true);
  QTable q(3);
  std::mt19937_64 rng(5);
  Plan(m, q, 200, 1.0, 0.98, rng);
  CHECK(RelClose(q.at(1, Action::kRight), 1.0));
  CHECK(RelClose(q.at(0, Action::kRight), 0.98));
  CHECK(q.at(0, Action::kUp) == 0.0);
}

TEST_CASE("zero planning steps leave the table bit-identical") {
  TransitionModel m(3);
  m.Record(0, Action::kRight, {1, 0}, 1, 1.0, 1);
  QTable q(3);
  q.at(0, Action::kRight) = 0.123;
  const QTable before = q;
  std::mt19937_64 rng(5);
  const std::mt19937_64 rng_before = rng;
  Plan(m, q, 0, 0.5, 0.9, rng);
  CHECK(q == before);
  CHECK(rng == rng_before);
}

TEST_CASE("planning with an empty model is a no-op") {
  TransitionModel m(3);
  QTable q(3);
  std::mt19937_64 rng(5);
  Plan(m, q, 10, 0.5, 0.9, rng);
  CHECK(q == QTable(3));
}

TEST_CASE("state prediction error") {
  TransitionModel m(4);
  CHECK(Spe(m, 0, Action::kUp, {0, 0}, 58) == 1.0);
  m.Record(0, Action::kUp, {0, 1}, 1, 0.0, 1);
  CHECK(Spe(m, 0, Action::kUp, {0, 1}, 58) == 0.0);
  CHECK(RelClose(Spe(m, 0, Action::kUp, {20, 10}, 58), 0.5));
}

TEST_CASE("error categories") {
  CHECK(Categorize(0.0, 0.1) == ErrorCategory::kZero);
  CHECK(Categorize(0.1, 0.1) == ErrorCategory::kZero);
  CHECK(Categorize(-0.1, 0.1) == ErrorCategory::kZero);
  CHECK(Categorize(0.2, 0.1) == ErrorCategory::kPositive);
  CHECK(Categorize(-0.2, 0.1) == ErrorCategory::kNegative);
  CHECK(Rpe(-0.3) == -0.3);
}

TEST_CASE("dirichlet reliability reference values") {
  CHECK(RelClose(ReliabilityScore({1.0, 1.0, 1.0}), 2.0));
  CHECK(RelClose(ReliabilityScore({101.0, 1.0, 1.0}), 5252.000000000001));
  CHECK(RelClose(ReliabilityScore({7.0, 3.0, 2.0}), 18.200000000000003));
  CHECK(RelClose(ArbitrationProbability(5252.000000000001, 2.0, 1e-6), 0.9996193374572478));
  CHECK(ReliabilityScore({3.0, 0.0, 0.0}) == kReliabilityCap);
}

TEST_CASE("reliability equals squared mean over variance") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.1, 500.0);
  for (int i = 0; i < 2000; ++i) {
    const Concentration lam{u(rng), u(rng), u(rng)};
    const double total = lam[0] + lam[1] + lam[2];
    const double mean = lam[0] / total;
    const double var = lam[0] * (total - lam[0]) / (total * total * (total + 1.0));
    CHECK(RelClose(ReliabilityScore(lam), mean * mean / var, 1e-9));
  }
}

TEST_CASE("reliability updates increment one concentration") {
  ReliabilityState rel;
  ReliabilityUpdate(rel, ControlSystem::kModelBased, ErrorCategory::kZero);
  ReliabilityUpdate(rel, ControlSystem::kModelFree, ErrorCategory::kPositive);
  ReliabilityUpdate(rel, ControlSystem::kModelFree, ErrorCategory::kNegative);
  CHECK(rel.lam_mb == Concentration{2.0, 1.0, 1.0});
  CHECK(rel.lam_mf == Concentration{1.0, 2.0, 2.0});
}

TEST_CASE("arbitration starts even and stays in the unit interval") {
  ReliabilityState rel;
  CHECK(RefreshArbitration(rel) == doctest::Approx(0.5).epsilon(1e-6));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> cat(0, 2);
  std::bernoulli_distribution mb(0.5);
  for (int i = 0; i < 5000; ++i) {
    ReliabilityUpdate(rel, mb(rng) ? ControlSystem::kModelBased : ControlSystem::kModelFree,
                      static_cast<ErrorCategory>(cat(rng)));
    const double p = RefreshArbitration(rel);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("a reliable model-based system gains control monotonically") {
  ReliabilityState rel;
  double prev = RefreshArbitration(rel);
  for (int i = 0; i < 500; ++i) {
    ReliabilityUpdate(rel, ControlSystem::kModelBased, ErrorCategory::kZero);
    ReliabilityUpdate(rel, ControlSystem::kModelFree,
                      i % 2 ? ErrorCategory::kPositive : ErrorCategory::kNegative);
    const double p = RefreshArbitration(rel);
    CHECK(p >= prev);
    prev = p;
  }
  CHECK(prev > 0.99);
}

TEST_CASE("hybrid values are a convex combination") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_real_distribution<double> p01(0.0, 1.0);
  QTable mf(3), mb(3);
  for (int s = 0; s < 3; ++s) {
    for (Action a : kAllActions) {
      mf.at(s, a) = u(rng);
      mb.at(s, a) = u(rng);
    }
  }
  for (int i = 0; i < 500; ++i) {
    const double p = p01(rng);
    const int s = i % 3;
    const ActionValues h = HybridQ(mf, mb, p, s);
    for (Action a : kAllActions) {
      const double lo = std::min(mf.at(s, a), mb.at(s, a));
      const double hi = std::max(mf.at(s, a), mb.at(s, a));
      CHECK(h[ActionIndex(a)] >= lo - 1e-12);
      CHECK(h[ActionIndex(a)] <= hi + 1e-12);
    }
  }
  CHECK(HybridQ(mf, mb, 0.0, 1) == mf.RowCopy(1));
  CHECK(HybridQ(mf, mb, 1.0, 1) == mb.RowCopy(1));
}

}  // TEST_SUITE

}  // namespace
}  // namespace pitnav
