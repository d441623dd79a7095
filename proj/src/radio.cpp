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

#include "pitnav/radio.hpp"

#include <algorithm>
#include <numbers>

namespace pitnav {

void RadioConfig::Validate() const {
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("radio: bandwidth must be > 0");
  if (!(carrier_hz > 0.0)) throw std::invalid_argument("radio: carrier must be > 0");
  if (eta_los > eta_nlos) throw std::invalid_argument("radio: eta_los must be <= eta_nlos");
  if (shadowing_sigma_db < 0.0) throw std::invalid_argument("radio: shadowing sigma must be >= 0");
  if (!(effective_bandwidth() > 0.0)) {
    throw std::invalid_argument("radio: effective bandwidth must be > 0");
  }
}

void GpsModel::Validate() const {
  if (sigma2_denied < 0.0 || sigma2_normal < 0.0) {
    throw std::invalid_argument("gps: variances must be >= 0");
  }
  if (sigma2_denied < sigma2_normal) {
    throw std::invalid_argument("gps: denied variance must be >= normal variance");
  }
}

double PathLossDb(const RadioConfig& cfg, double distance_m, bool los) {
  const double d = std::max(distance_m, 1.0);
  const double eta = los ? cfg.eta_los : cfg.eta_nlos;
  return 20.0 * std::log10(4.0 * std::numbers::pi / cfg.wavelength()) +
         10.0 * eta * std::log10(d);
}

double ReceivedPowerDbm(const RadioConfig& cfg, double distance_m, bool los,
                        double wall_loss_db, double shadow_db) {
  const double loss = PathLossDb(cfg, distance_m, los) + wall_loss_db;
  return cfg.p_t_dbm + cfg.g_t_dbi + cfg.g_r_dbi - loss + shadow_db;
}

double MaxReceivedPowerDbm(const RadioConfig& cfg) {
  return ReceivedPowerDbm(cfg, 1.0, true, 0.0, 0.0);
}

double RssiReward(const RadioConfig& cfg, double p_r_dbm) {
  const double p_max = MaxReceivedPowerDbm(cfg);
  double r;
  if (cfg.rssi_linear) {
    r = std::pow(10.0, (p_r_dbm - p_max) / 10.0);
  } else {
    // dBm-domain ratio; both values are negative for any realistic link.
    r = p_max / p_r_dbm;
  }
  return std::min(r, 1.0);
}

double NoisePowerDbm(const RadioConfig& cfg) {
  return -174.0 + 10.0 * std::log10(cfg.bandwidth_hz) + cfg.noise_figure_db;
}

double SnrLinear(const RadioConfig& cfg, double p_r_dbm) {
  return std::pow(10.0, (p_r_dbm - NoisePowerDbm(cfg)) / 10.0);
}

double RangingVariance(const RadioConfig& cfg, double snr) {
  if (!(snr > 0.0)) throw DegenerateLinkError("ranging variance needs snr > 0");
  const double beta = cfg.effective_bandwidth();
  return kSpeedOfLight * kSpeedOfLight /
         (8.0 * std::numbers::pi * std::numbers::pi * snr * beta * beta);
}

Mat2 GpsCovariance(const GpsModel& gps, bool in_denied) {
  const double s2 = in_denied ? gps.sigma2_denied : gps.sigma2_normal;
  return Mat2::Diagonal(s2, s2);
}

}  // namespace pitnav
