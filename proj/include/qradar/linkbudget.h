// Copyright 2026 The qradar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form link-budget, noise and EMI calculators. Every "log" in a dB
// formula is log10. All functions throw DegenerateInput on non-positive or
// non-finite physical inputs.

#ifndef QRADAR_LINKBUDGET_H
#define QRADAR_LINKBUDGET_H

#include <optional>
#include <string>
#include <vector>

namespace qradar {

/// Exact 2019 SI values.
struct PhysicalConstants {
    static constexpr double planck_h = 6.62607015e-34;    // J s
    static constexpr double boltzmann_kb = 1.380649e-23;  // J / K
};

/// Reference power for dBm.
inline constexpr double kMilliwatt = 1e-3;

/// Below this reduced frequency h*nu/(kB*T) thermal_occupancy uses its Laurent series.
inline constexpr double kOccupancySeriesCutoff = 1e-6;

/// Occupancies below this are reported as exactly 0.
inline constexpr double kOccupancyFloor = 1e-100;

double watts_to_dbm(double watts);
double dbm_to_watts(double dbm);

/// h f.
double photon_energy(double frequency_hz);

/// Photons per second carried by `power_w` at `frequency_hz`.
double photon_rate(double power_w, double frequency_hz);

/// Bose-Einstein mean photon number 1 / (exp(h nu / kB T) - 1).
double thermal_occupancy(double frequency_hz, double temperature_k);

/// nbar / (1 + nbar): the excited-state probability of a qubit truncation of a
/// thermal mode. Saturates toward 1 for nbar >> 1.
double occupancy_to_excitation(double nbar);

double snr(double p_signal_w, double p_noise_w);

/// Range gain for a given sensitivity improvement, R ~ (1/P_min)^(1/4).
double range_multiplier(double sensitivity_improvement);

/// 20 log10(d / lambda) dB. Negative when the shield is thinner than the wavelength.
double shielding_effectiveness(double thickness_m, double wavelength_m);

/// N_ext / N_isolated.
double isolation_factor(double noise_ext, double noise_isolated);

/// 20 log10(A_stop / A_pass) dB.
double stopband_attenuation(double amplitude_stop, double amplitude_pass);

/// Optional calculator inputs. Each output is produced when all of its inputs are present.
struct LinkBudgetInputs {
    std::optional<double> power_w;
    std::optional<double> frequency_hz;
    std::optional<double> temperature_k;
    std::optional<double> noise_power_w;
    std::optional<double> sensitivity_improvement;
    std::optional<double> shield_thickness_m;
    std::optional<double> wavelength_m;
    std::optional<double> amplitude_stop;
    std::optional<double> amplitude_pass;
    std::optional<double> noise_ext;
    std::optional<double> noise_isolated;

    bool operator==(const LinkBudgetInputs &) const = default;
};

struct LinkBudgetOutputs {
    std::optional<double> power_dbm;                   // power_w
    std::optional<double> photon_energy_j;             // frequency_hz
    std::optional<double> photon_rate_per_s;           // power_w, frequency_hz
    std::optional<double> thermal_occupancy;           // frequency_hz, temperature_k
    std::optional<double> noise_excitation;            // frequency_hz, temperature_k
    std::optional<double> noise_power_dbm;             // noise_power_w
    std::optional<double> snr;                         // power_w, noise_power_w
    std::optional<double> range_multiplier;            // sensitivity_improvement
    std::optional<double> shielding_effectiveness_db;  // shield_thickness_m, wavelength_m
    std::optional<double> isolation_factor;            // noise_ext, noise_isolated
    std::optional<double> stopband_attenuation_db;     // amplitude_stop, amplitude_pass

    bool operator==(const LinkBudgetOutputs &) const = default;
};

/// Occupancy above which the qubit noise model is flagged as saturated.
inline constexpr double kSaturatedOccupancy = 10.0;

/// Evaluates every calculator whose inputs are present. Questionable regimes
/// (negative SE or SA, saturated thermal occupancy) are appended to `warnings`.
LinkBudgetOutputs evaluate_link_budget(const LinkBudgetInputs &in, std::vector<std::string> &warnings);

}  // namespace qradar

#endif
