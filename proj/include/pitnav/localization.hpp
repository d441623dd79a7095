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

#ifndef PITNAV_LOCALIZATION_HPP_
#define PITNAV_LOCALIZATION_HPP_

#include <random>
#include <span>
#include <stdexcept>

namespace pitnav {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

double Norm(Vec2 v);

// Row-major 2x2 matrix [[xx, xy], [yx, yy]].
struct Mat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yx = 0.0;
  double yy = 0.0;

  static constexpr Mat2 Diagonal(double a, double b) { return {a, 0.0, 0.0, b}; }
  static constexpr Mat2 Identity() { return Diagonal(1.0, 1.0); }
  static constexpr Mat2 Outer(Vec2 u, Vec2 v) {
    return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
  }

  constexpr double Trace() const { return xx + yy; }
  constexpr double Det() const { return xx * yy - xy * yx; }
  constexpr double Quadratic(Vec2 u) const {
    return u.x * (xx * u.x + xy * u.y) + u.y * (yx * u.x + yy * u.y);
  }

  friend constexpr Mat2 operator+(Mat2 a, Mat2 b) {
    return {a.xx + b.xx, a.xy + b.xy, a.yx + b.yx, a.yy + b.yy};
  }
  friend constexpr Mat2 operator*(double s, Mat2 a) {
    return {s * a.xx, s * a.xy, s * a.yx, s * a.yy};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

// Fisher information for the 2-D target position, 1/m^2.
struct FisherInfo {
  Mat2 j;
};

struct PebResult {
  double peb = 0.0;
  bool well_conditioned = false;
};

inline constexpr double kDefaultCondThreshold = 1e-12;

class UndefinedBearingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// GPS-corrupted position estimate. Always consumes exactly two normal draws so
// the stream stays aligned whether or not the covariance is zero.
Vec2 NoisyAgentPosition(Vec2 pos, const Mat2& gps_cov, std::mt19937_64& rng);

// Rank-one ranging information from one agent. The GPS covariance is projected
// onto the bearing and added to the ranging variance.
FisherInfo AgentFim(Vec2 target, Vec2 est_pos, double var_range, const Mat2& gps_cov);

FisherInfo TotalFim(std::span<const FisherInfo> parts);

// sqrt(trace(J^-1)) through the closed-form 2x2 inverse. Returns +inf when the
// reciprocal condition number is below `cond_threshold` or det(J) <= 0.
PebResult Peb(const FisherInfo& fim, double cond_threshold = kDefaultCondThreshold);

inline bool MissionSuccess(double peb, double peb_star) { return peb <= peb_star; }

}  // namespace pitnav

#endif  // PITNAV_LOCALIZATION_HPP_
