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

#include "qradar/linkbudget.h"

#include <cmath>

#include "qradar/errors.h"

namespace qradar {

namespace {

double positive(double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DegenerateInput(std::string(name) + " must be finite and positive");
    }
    return v;
}

}  // namespace

double watts_to_dbm(double watts) {
    positive(watts, "power");
    return 10.0 * std::log10(watts / kMilliwatt);
}

double dbm_to_watts(double dbm) {
    if (!std::isfinite(dbm)) {
        throw DegenerateInput("dBm value must be finite");
    }
    return kMilliwatt * std::pow(10.0, dbm / 10.0);
}

double photon_energy(double frequency_hz) {
    return PhysicalConstants::planck_h * positive(frequency_hz, "frequency");
}

double photon_rate(double power_w, double frequency_hz) {
    return positive(power_w, "power") / photon_energy(frequency_hz);
}

double thermal_occupancy(double frequency_hz, double temperature_k) {
    positive(frequency_hz, "frequency");
    positive(temperature_k, "temperature");
    const double x = PhysicalConstants::planck_h * frequency_hz / (PhysicalConstants::boltzmann_kb * temperature_k);
    double nbar;
    if (x < kOccupancySeriesCutoff) {
        // 1/(e^x - 1) = 1/x - 1/2 + x/12 - x^3/720 + ...
        nbar = 1.0 / x - 0.5 + x / 12.0;
    } else {
        nbar = 1.0 / std::expm1(x);
    }
    return nbar < kOccupancyFloor ? 0.0 : nbar;
}

double occupancy_to_excitation(double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw DegenerateInput("mean photon number must be finite and non-negative");
    }
    return nbar / (1.0 + nbar);
}

double snr(double p_signal_w, double p_noise_w) {
    return positive(p_signal_w, "signal power") / positive(p_noise_w, "noise power");
}

double range_multiplier(double sensitivity_improvement) {
    return std::pow(positive(sensitivity_improvement, "sensitivity improvement"), 0.25);
}

double shielding_effectiveness(double thickness_m, double wavelength_m) {
    return 20.0 * std::log10(positive(thickness_m, "shield thickness") / positive(wavelength_m, "wavelength"));
}

double isolation_factor(double noise_ext, double noise_isolated) {
    return positive(noise_ext, "external noise") / positive(noise_isolated, "isolated noise");
}

double stopband_attenuation(double amplitude_stop, double amplitude_pass) {
    return 20.0 * std::log10(positive(amplitude_stop, "stopband amplitude") /
                             positive(amplitude_pass, "passband amplitude"));
}

LinkBudgetOutputs evaluate_link_budget(const LinkBudgetInputs &in, std::vector<std::string> &warnings) {
    LinkBudgetOutputs out;
    if (in.power_w) {
        out.power_dbm = watts_to_dbm(*in.power_w);
    }
    if (in.frequency_hz) {
        out.photon_energy_j = photon_energy(*in.frequency_hz);
        if (in.power_w) {
            out.photon_rate_per_s = photon_rate(*in.power_w, *in.frequency_hz);
        }
        if (in.temperature_k) {
            out.thermal_occupancy = thermal_occupancy(*in.frequency_hz, *in.temperature_k);
            out.noise_excitation = occupancy_to_excitation(*out.thermal_occupancy);
            if (*out.thermal_occupancy > kSaturatedOccupancy) {
                warnings.push_back("link_budget.thermal_occupancy: mean photon number far above 1; "
                                   "the qubit noise model saturates (noise_excitation -> 1)");
            }
        }
    }
    if (in.noise_power_w) {
        out.noise_power_dbm = watts_to_dbm(*in.noise_power_w);
        if (in.power_w) {
            out.snr = snr(*in.power_w, *in.noise_power_w);
        }
    }
    if (in.sensitivity_improvement) {
        out.range_multiplier = range_multiplier(*in.sensitivity_improvement);
    }
    if (in.shield_thickness_m && in.wavelength_m) {
        out.shielding_effectiveness_db = shielding_effectiveness(*in.shield_thickness_m, *in.wavelength_m);
        if (*out.shielding_effectiveness_db < 0.0) {
            warnings.push_back("link_budget.shielding_effectiveness_db: negative value; shield thinner than "
                               "the interference wavelength (sub-wavelength regime)");
        }
    }
    if (in.noise_ext && in.noise_isolated) {
        out.isolation_factor = isolation_factor(*in.noise_ext, *in.noise_isolated);
    }
    if (in.amplitude_stop && in.amplitude_pass) {
        out.stopband_attenuation_db = stopband_attenuation(*in.amplitude_stop, *in.amplitude_pass);
        if (*out.stopband_attenuation_db < 0.0) {
            warnings.push_back("link_budget.stopband_attenuation_db: negative value; stopband amplitude is "
                               "below passband amplitude under the A_stop/A_pass sign convention");
        }
    }
    return out;
}

}  // namespace qradar
