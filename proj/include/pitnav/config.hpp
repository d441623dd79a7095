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

#ifndef PITNAV_CONFIG_HPP_
#define PITNAV_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pitnav/learners.hpp"
#include "pitnav/radio.hpp"
#include "pitnav/rewards.hpp"

namespace pitnav {

enum class Variant { kInstrumentalMF, kPitMF, kInstrumentalMFMB, kPitMFMB };

inline constexpr Variant kAllVariants[] = {Variant::kInstrumentalMF, Variant::kPitMF,
                                           Variant::kInstrumentalMFMB, Variant::kPitMFMB};

std::string_view VariantName(Variant v);
Variant ParseVariant(std::string_view name);

inline bool UsesPavlovianBias(Variant v) {
  return v == Variant::kPitMF || v == Variant::kPitMFMB;
}
inline bool UsesModelBased(Variant v) {
  return v == Variant::kInstrumentalMFMB || v == Variant::kPitMFMB;
}

struct PlannerParams {
  int k = 2;
  double zeta_spe = 0.1;
  double zeta_rpe = 0.1;
  double epsilon = 1e-6;
  double prior = 1.0;
};

struct ExperimentConfig {
  std::filesystem::path map_path;
  double cell_size = 1.0;
  int n_agents = 4;
  int n_episodes = 1200;
  int n_steps = 800;
  double peb_star = 0.5;
  double cond_threshold = 1e-12;
  Variant variant = Variant::kPitMFMB;
  bool motivation_enabled = true;
  std::uint64_t seed = 1;
  int n_monte_carlo = 40;

  // Energy units drawn per movement action and per hover.
  double move_cost = 1.0;
  double hover_cost = 0.5;

  LearnParams learn;
  PlannerParams planner;
  MotivationParams motivation;
  RewardParams reward;
  RadioConfig radio;
  GpsModel gps;

  // Keep full trajectories for episode 1, every Nth episode and the last one.
  int trajectory_stride = 100;

  // b_max / t_max follow n_steps unless set explicitly.
  bool b_max_explicit = false;
  bool t_max_explicit = false;

  void Validate() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults: every constant at its published value and the bundled map.
ExperimentConfig DefaultConfig();

std::filesystem::path DefaultMapPath();

// Applies "section.key=value" lines on top of `cfg`. Blank lines and '#'
// comments are ignored. Unknown keys and malformed values throw ConfigError.
void ApplyConfigText(ExperimentConfig& cfg, std::string_view text,
                     const std::filesystem::path& base_dir = {});
void ApplyConfigOverride(ExperimentConfig& cfg, std::string_view key, std::string_view value);

ExperimentConfig LoadConfigFile(const std::filesystem::path& path);

// Inverse of ApplyConfigText: one line per known key, in registry order.
std::string DumpConfig(const ExperimentConfig& cfg);

std::vector<std::string> ConfigKeys();

// Shortest decimal representation that round-trips.
std::string FormatDouble(double v);

}  // namespace pitnav

#endif  // PITNAV_CONFIG_HPP_
