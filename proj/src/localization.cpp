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

#include "pitnav/localization.hpp"

#include <cmath>
#include <limits>

namespace pitnav {

double Norm(Vec2 v) { return std::hypot(v.x, v.y); }

Vec2 NoisyAgentPosition(Vec2 pos, const Mat2& gps_cov, std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  const double zx = n01(rng);
  const double zy = n01(rng);
  return {pos.x + std::sqrt(gps_cov.xx) * zx, pos.y + std::sqrt(gps_cov.yy) * zy};
}

FisherInfo AgentFim(Vec2 target, Vec2 est_pos, double var_range, const Mat2& gps_cov) {
  const Vec2 diff = target - est_pos;
  const double dist = Norm(diff);
  if (!(dist > 0.0)) throw UndefinedBearingError("agent estimate coincides with target");
  const Vec2 u = (1.0 / dist) * diff;
  const double var_total = var_range + gps_cov.Quadratic(u);
  return {(1.0 / var_total) * Mat2::Outer(u, u)};
}

FisherInfo TotalFim(std::span<const FisherInfo> parts) {
  FisherInfo total;
  for (const auto& p : parts) total.j = total.j + p.j;
  return total;
}

PebResult Peb(const FisherInfo& fim, double cond_threshold) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const Mat2& j = fim.j;
  const double off = 0.5 * (j.xy + j.yx);
  const double det = j.xx * j.yy - off * off;
  const double tr = j.xx + j.yy;
  if (!(det > 0.0) || !(tr > 0.0)) return {kInf, false};

  const double half = 0.5 * tr;
  const double lam_max = half + std::sqrt(std::max(0.0, half * half - det));
  const double lam_min = det / lam_max;
  if (lam_min / lam_max < cond_threshold) return {kInf, false};

  // trace(J^-1) = (j_xx + j_yy) / det for a 2x2 matrix.
  return {std::sqrt(tr / det), true};
}

}  // namespace pitnav
