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

#include "pitnav/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#ifndef PITNAV_DEFAULT_MAP
#define PITNAV_DEFAULT_MAP "data/maps/default.map"
#endif

namespace pitnav {

std::string_view VariantName(Variant v) {
  switch (v) {
    case Variant::kInstrumentalMF: return "instrumental_mf";
    case Variant::kPitMF: return "pit_mf";
    case Variant::kInstrumentalMFMB: return "instrumental_mf_mb";
    case Variant::kPitMFMB: return "pit_mf_mb";
  }
  return "?";
}

Variant ParseVariant(std::string_view name) {
  for (Variant v : kAllVariants) {
    if (VariantName(v) == name) return v;
  }
  throw ConfigError("unknown variant '" + std::string(name) +
                    "' (expected instrumental_mf, pit_mf, instrumental_mf_mb or pit_mf_mb)");
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view text) {
  T out{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for key " + std::string(key));
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError("invalid boolean '" + std::string(text) + "' for key " + std::string(key));
}

struct Binding {
  std::string key;
  std::function<void(ExperimentConfig&, std::string_view)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

template <typename Access>
Binding Real(std::string key, Access access) {
  return {key,
          [key, access](ExperimentConfig& c, std::string_view v) {
            access(c) = ParseNumber<double>(key, v);
          },
          [access](const ExperimentConfig& c) {
            return FormatDouble(access(c));
          }};
}

template <typename Access>
Binding Integer(std::string key, Access access) {
  return {key,
          [key, access](ExperimentConfig& c, std::string_view v) {
            access(c) = ParseNumber<std::remove_reference_t<decltype(access(c))>>(key, v);
          },
          [access](const ExperimentConfig& c) {
            return std::to_string(access(c));
          }};
}

template <typename Access>
Binding Flag(std::string key, Access access) {
  return {key,
          [key, access](ExperimentConfig& c, std::string_view v) { access(c) = ParseBool(key, v); },
          [access](const ExperimentConfig& c) {
            return std::string(access(c) ? "true" : "false");
          }};
}

#define PITNAV_FIELD(expr) [](auto& c) -> auto& { return c.expr; }

const std::vector<Binding>& Registry() {
  static const std::vector<Binding> bindings = [] {
    std::vector<Binding> b;
    b.push_back({"sim.map",
                 [](ExperimentConfig& c, std::string_view v) { c.map_path = std::string(v); },
                 [](const ExperimentConfig& c) { return c.map_path.string(); }});
    b.push_back({"sim.variant",
                 [](ExperimentConfig& c, std::string_view v) { c.variant = ParseVariant(v); },
                 [](const ExperimentConfig& c) { return std::string(VariantName(c.variant)); }});
    b.push_back(Flag("sim.motivation", PITNAV_FIELD(motivation_enabled)));
    b.push_back(Integer("sim.seed", PITNAV_FIELD(seed)));
    b.push_back(Integer("sim.n_agents", PITNAV_FIELD(n_agents)));
    b.push_back(Integer("sim.n_episodes", PITNAV_FIELD(n_episodes)));
    b.push_back(Integer("sim.n_steps", PITNAV_FIELD(n_steps)));
    b.push_back(Integer("sim.n_monte_carlo", PITNAV_FIELD(n_monte_carlo)));
    b.push_back(Real("sim.peb_star", PITNAV_FIELD(peb_star)));
    b.push_back(Real("sim.cond_threshold", PITNAV_FIELD(cond_threshold)));
    b.push_back(Real("sim.cell_size", PITNAV_FIELD(cell_size)));
    b.push_back(Real("sim.move_cost", PITNAV_FIELD(move_cost)));
    b.push_back(Real("sim.hover_cost", PITNAV_FIELD(hover_cost)));

    b.push_back(Real("learn.alpha.initial", PITNAV_FIELD(learn.alpha.initial)));
    b.push_back(Real("learn.alpha.decay", PITNAV_FIELD(learn.alpha.decay)));
    b.push_back(Real("learn.alpha.floor", PITNAV_FIELD(learn.alpha.floor)));
    b.push_back(Real("learn.gamma", PITNAV_FIELD(learn.gamma)));
    b.push_back(Real("learn.kappa.initial", PITNAV_FIELD(learn.kappa.initial)));
    b.push_back(Real("learn.kappa.decay", PITNAV_FIELD(learn.kappa.decay)));
    b.push_back(Real("learn.kappa.floor", PITNAV_FIELD(learn.kappa.floor)));
    b.push_back(Real("learn.beta", PITNAV_FIELD(learn.beta)));

    b.push_back(Integer("planner.k", PITNAV_FIELD(planner.k)));
    b.push_back(Real("planner.zeta_spe", PITNAV_FIELD(planner.zeta_spe)));
    b.push_back(Real("planner.zeta_rpe", PITNAV_FIELD(planner.zeta_rpe)));
    b.push_back(Real("planner.epsilon", PITNAV_FIELD(planner.epsilon)));
    b.push_back(Real("planner.prior", PITNAV_FIELD(planner.prior)));

    b.push_back(Real("motivation.xi_battery", PITNAV_FIELD(motivation.xi_battery)));
    b.push_back(Real("motivation.xi_time", PITNAV_FIELD(motivation.xi_time)));
    b.push_back(Real("motivation.phi", PITNAV_FIELD(motivation.phi)));
    b.push_back({"motivation.b_max",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.motivation.b_max = ParseNumber<double>("motivation.b_max", v);
                   c.b_max_explicit = true;
                 },
                 [](const ExperimentConfig& c) { return FormatDouble(c.motivation.b_max); }});
    b.push_back({"motivation.t_max",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.motivation.t_max = ParseNumber<double>("motivation.t_max", v);
                   c.t_max_explicit = true;
                 },
                 [](const ExperimentConfig& c) { return FormatDouble(c.motivation.t_max); }});

    b.push_back(Real("reward.lambda_col", PITNAV_FIELD(reward.lambda_col)));
    b.push_back(Real("reward.r_goal", PITNAV_FIELD(reward.r_goal)));
    b.push_back(Real("reward.r_cue", PITNAV_FIELD(reward.r_cue)));
    b.push_back(Real("reward.d_safe", PITNAV_FIELD(reward.d_safe)));
    b.push_back(Flag("reward.gate_once_per_episode", PITNAV_FIELD(reward.gate_once_per_episode)));

    b.push_back(Real("radio.p_t_dbm", PITNAV_FIELD(radio.p_t_dbm)));
    b.push_back(Real("radio.g_t_dbi", PITNAV_FIELD(radio.g_t_dbi)));
    b.push_back(Real("radio.g_r_dbi", PITNAV_FIELD(radio.g_r_dbi)));
    b.push_back(Real("radio.carrier_hz", PITNAV_FIELD(radio.carrier_hz)));
    b.push_back(Real("radio.bandwidth_hz", PITNAV_FIELD(radio.bandwidth_hz)));
    b.push_back(Real("radio.noise_figure_db", PITNAV_FIELD(radio.noise_figure_db)));
    b.push_back(Real("radio.eta_los", PITNAV_FIELD(radio.eta_los)));
    b.push_back(Real("radio.eta_nlos", PITNAV_FIELD(radio.eta_nlos)));
    b.push_back(Real("radio.wall_loss_db", PITNAV_FIELD(radio.wall_loss_db)));
    b.push_back(Real("radio.shadowing_sigma_db", PITNAV_FIELD(radio.shadowing_sigma_db)));
    b.push_back(Real("radio.beta_eff_hz", PITNAV_FIELD(radio.beta_eff_hz)));
    b.push_back({"radio.rssi_norm",
                 [](ExperimentConfig& c, std::string_view v) {
                   if (v == "linear") {
                     c.radio.rssi_linear = true;
                   } else if (v == "dbm") {
                     c.radio.rssi_linear = false;
                   } else {
                     throw ConfigError("radio.rssi_norm must be 'linear' or 'dbm'");
                   }
                 },
                 [](const ExperimentConfig& c) {
                   return std::string(c.radio.rssi_linear ? "linear" : "dbm");
                 }});

    b.push_back(Real("gps.sigma2_denied", PITNAV_FIELD(gps.sigma2_denied)));
    b.push_back(Real("gps.sigma2_normal", PITNAV_FIELD(gps.sigma2_normal)));

    b.push_back(Integer("export.trajectory_stride", PITNAV_FIELD(trajectory_stride)));
    return b;
  }();
  return bindings;
}

#undef PITNAV_FIELD

const Binding* FindBinding(std::string_view key) {
  for (const auto& b : Registry()) {
    if (b.key == key) return &b;
  }
  return nullptr;
}

}  // namespace

std::filesystem::path DefaultMapPath() { return PITNAV_DEFAULT_MAP; }

ExperimentConfig DefaultConfig() {
  ExperimentConfig cfg;
  cfg.map_path = DefaultMapPath();
  cfg.motivation.b_max = cfg.n_steps;
  cfg.motivation.t_max = cfg.n_steps;
  return cfg;
}

void ApplyConfigOverride(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  const Binding* b = FindBinding(key);
  if (b == nullptr) throw ConfigError("unknown config key '" + std::string(key) + "'");
  b->set(cfg, value);
  if (!cfg.b_max_explicit) cfg.motivation.b_max = cfg.n_steps;
  if (!cfg.t_max_explicit) cfg.motivation.t_max = cfg.n_steps;
}

void ApplyConfigText(ExperimentConfig& cfg, std::string_view text,
                     const std::filesystem::path& base_dir) {
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = Trim(view.substr(0, eq));
    const auto value = Trim(view.substr(eq + 1));
    try {
      ApplyConfigOverride(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (key == "sim.map" && !base_dir.empty() && cfg.map_path.is_relative()) {
      cfg.map_path = base_dir / cfg.map_path;
    }
  }
}

ExperimentConfig LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  ExperimentConfig cfg = DefaultConfig();
  try {
    ApplyConfigText(cfg, buf.str(), path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return cfg;
}

std::string DumpConfig(const ExperimentConfig& cfg) {
  std::string out;
  for (const auto& b : Registry()) {
    if (b.key == "motivation.b_max" && !cfg.b_max_explicit) continue;
    if (b.key == "motivation.t_max" && !cfg.t_max_explicit) continue;
    out += b.key + "=" + b.get(cfg) + "\n";
  }
  return out;
}

std::vector<std::string> ConfigKeys() {
  std::vector<std::string> keys;
  for (const auto& b : Registry()) keys.push_back(b.key);
  return keys;
}

void ExperimentConfig::Validate() const {
  if (n_agents < 1) throw ConfigError("sim.n_agents must be >= 1");
  if (n_episodes < 1) throw ConfigError("sim.n_episodes must be >= 1");
  if (n_steps < 1) throw ConfigError("sim.n_steps must be >= 1");
  if (n_monte_carlo < 1) throw ConfigError("sim.n_monte_carlo must be >= 1");
  if (!(peb_star > 0.0)) throw ConfigError("sim.peb_star must be > 0");
  if (!(cell_size > 0.0)) throw ConfigError("sim.cell_size must be > 0");
  if (planner.k < 0) throw ConfigError("planner.k must be >= 0");
  if (!(planner.zeta_spe > 0.0) || !(planner.zeta_rpe > 0.0)) {
    throw ConfigError("planner zeta thresholds must be > 0");
  }
  if (!(planner.epsilon > 0.0)) throw ConfigError("planner.epsilon must be > 0");
  if (!(planner.prior > 0.0)) throw ConfigError("planner.prior must be > 0");
  if (move_cost < 0.0 || hover_cost < 0.0) throw ConfigError("energy costs must be >= 0");
  if (trajectory_stride < 1) throw ConfigError("export.trajectory_stride must be >= 1");
  try {
    learn.Validate();
    motivation.Validate();
    reward.Validate();
    radio.Validate();
    gps.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace pitnav
