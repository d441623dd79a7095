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

#ifndef PITNAV_RADIO_HPP_
#define PITNAV_RADIO_HPP_

#include <cmath>
#include <stdexcept>

#include "pitnav/localization.hpp"

namespace pitnav {

inline constexpr double kSpeedOfLight = 299792458.0;

// Target-to-agent beacon link. Powers in dBm, gains in dBi, losses in dB.
struct RadioConfig {
  double p_t_dbm = -10.0;
  double g_t_dbi = 2.0;
  double g_r_dbi = 2.0;
  double carrier_hz = 2.4e9;
  double bandwidth_hz = 1e6;
  double noise_figure_db = 10.0;
  double eta_los = 2.0;
  double eta_nlos = 3.5;
  double wall_loss_db = 25.0;
  double shadowing_sigma_db = 0.0;
  // Effective (RMS) bandwidth; <= 0 selects the flat-spectrum value B/sqrt(12).
  double beta_eff_hz = 0.0;
  // Normalize RSSI as a linear power ratio (default) or as a ratio of dBm values.
  bool rssi_linear = true;

  double wavelength() const { return kSpeedOfLight / carrier_hz; }
  double effective_bandwidth() const {
    return beta_eff_hz > 0.0 ? beta_eff_hz : bandwidth_hz / std::sqrt(12.0);
  }
  void Validate() const;
};

struct GpsModel {
  double sigma2_denied = 100.0;
  double sigma2_normal = 0.0;
  void Validate() const;
};

struct Measurement {
  double p_r_dbm = 0.0;
  double snr = 0.0;
  double var_range = 0.0;
  double var_total = 0.0;
};

class DegenerateLinkError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Free-space reference term plus distance exponent. Distances below the 1 m
// reference are clamped.
double PathLossDb(const RadioConfig& cfg, double distance_m, bool los);

double ReceivedPowerDbm(const RadioConfig& cfg, double distance_m, bool los,
                        double wall_loss_db, double shadow_db);

// Reference power: 1 m, LOS, no walls, no shadowing.
double MaxReceivedPowerDbm(const RadioConfig& cfg);

// Received power normalized by the reference power, in (0, 1].
double RssiReward(const RadioConfig& cfg, double p_r_dbm);

// Thermal noise floor: -174 dBm/Hz + 10 log10(B) + NF.
double NoisePowerDbm(const RadioConfig& cfg);
double SnrLinear(const RadioConfig& cfg, double p_r_dbm);

// Time-of-arrival ranging variance in m^2. Throws DegenerateLinkError when
// snr <= 0.
double RangingVariance(const RadioConfig& cfg, double snr);

Mat2 GpsCovariance(const GpsModel& gps, bool in_denied);

}  // namespace pitnav

#endif  // PITNAV_RADIO_HPP_
