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
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "qradar/errors.h"

using namespace qradar;

namespace {

// hf/kT and the Bose-Einstein occupancy at 10 GHz, 290 K, evaluated with
// 50-digit arithmetic and the exact SI constants.
constexpr double kRoomX = 1.6549114046090418097e-3;
constexpr double kRoomOccupancy = 603.76209248577703892;
constexpr double kRoomExcitation = 0.99834645720618886463;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST(watts_to_dbm, published_examples) {
    EXPECT_EQ(watts_to_dbm(1e-13), -100.0);
    EXPECT_EQ(watts_to_dbm(1e-3), 0.0);
    EXPECT_EQ(watts_to_dbm(1e-16), -130.0);
    EXPECT_THROW(watts_to_dbm(0.0), DegenerateInput);
    EXPECT_THROW(watts_to_dbm(-1.0), DegenerateInput);
    EXPECT_THROW(watts_to_dbm(NAN), DegenerateInput);
}

TEST(dbm_to_watts, examples_and_round_trip) {
    EXPECT_LE(rel_err(dbm_to_watts(-100.0), 1e-13), 1e-15);
    EXPECT_EQ(dbm_to_watts(0.0), 1e-3);
    EXPECT_THROW(dbm_to_watts(INFINITY), DegenerateInput);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> exponent(-18.0, 2.0);
    for (int k = 0; k < 1000; ++k) {
        double w = std::pow(10.0, exponent(rng));
        EXPECT_LE(rel_err(dbm_to_watts(watts_to_dbm(w)), w), 1e-12);
    }
}

TEST(photon_energy, examples) {
    EXPECT_LE(rel_err(photon_energy(1e10), 6.63e-24), 0.01);
    EXPECT_LE(rel_err(photon_energy(1e10), 6.62607015e-24), 1e-15);
    EXPECT_LE(rel_err(photon_energy(0.5e10), 0.5 * photon_energy(1e10)), 1e-15);
    EXPECT_EQ(photon_energy(1.0), 6.62607015e-34);
    EXPECT_THROW(photon_energy(0.0), DegenerateInput);
}

TEST(photon_rate, examples) {
    EXPECT_LE(rel_err(photon_rate(1e-16, 1e10), 1.5e7), 0.01);
    EXPECT_LE(rel_err(photon_rate(1e-16, 1e10), 15091901.796421518), 1e-14);
    EXPECT_LE(rel_err(photon_rate(2e-16, 1e10), 2.0 * photon_rate(1e-16, 1e10)), 1e-15);
    EXPECT_NEAR(photon_rate(6.62607015e-24, 1e10), 1.0, 1e-15);
    EXPECT_THROW(photon_rate(0.0, 1e10), DegenerateInput);
    EXPECT_THROW(photon_rate(1e-16, -1.0), DegenerateInput);
}

TEST(photon_rate, energy_product_is_power) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> exponent(-20.0, 0.0);
    std::uniform_real_distribution<double> freq_exponent(6.0, 15.0);
    for (int k = 0; k < 1000; ++k) {
        double p = std::pow(10.0, exponent(rng));
        double f = std::pow(10.0, freq_exponent(rng));
        EXPECT_LE(rel_err(photon_rate(p, f) * photon_energy(f), p), 1e-12);
    }
}

TEST(thermal_occupancy, room_temperature_reference) {
    double x = PhysicalConstants::planck_h * 1e10 / (PhysicalConstants::boltzmann_kb * 290.0);
    EXPECT_LE(rel_err(x, kRoomX), 1e-15);
    EXPECT_LE(rel_err(thermal_occupancy(1e10, 290.0), kRoomOccupancy), 1e-6);
    EXPECT_LE(rel_err(thermal_occupancy(1e10, 290.0), kRoomOccupancy), 1e-13);
}

TEST(thermal_occupancy, limits) {
    EXPECT_EQ(thermal_occupancy(1e10, 1e-3), 0.0);
    // hf/kT = ln 2 gives exactly one photon.
    double t = PhysicalConstants::planck_h * 1e10 / (PhysicalConstants::boltzmann_kb * std::log(2.0));
    EXPECT_NEAR(thermal_occupancy(1e10, t), 1.0, 1e-14);
    EXPECT_THROW(thermal_occupancy(0.0, 290.0), DegenerateInput);
    EXPECT_THROW(thermal_occupancy(1e10, 0.0), DegenerateInput);
    EXPECT_THROW(thermal_occupancy(1e10, -1.0), DegenerateInput);
}

TEST(thermal_occupancy, series_matches_exact_at_crossover) {
    // Pick temperatures that put hf/kT just either side of the series cutoff.
    const double f = 1e9;
    const double t_at = PhysicalConstants::planck_h * f / (PhysicalConstants::boltzmann_kb * kOccupancySeriesCutoff);
    for (double scale : {0.999999, 1.0, 1.000001}) {
        double t = t_at * scale;
        double x = PhysicalConstants::planck_h * f / (PhysicalConstants::boltzmann_kb * t);
        double exact = 1.0 / std::expm1(x);
        double series = 1.0 / x - 0.5 + x / 12.0;
        EXPECT_LE(rel_err(series, exact), 1e-10);
        EXPECT_LE(rel_err(thermal_occupancy(f, t), exact), 1e-10);
    }
}

TEST(thermal_occupancy, monotone_grids) {
    for (int i = 0; i < 40; ++i) {
        double t = std::pow(10.0, -1.0 + 0.1 * i);
        double prev = std::numeric_limits<double>::infinity();
        for (int j = 0; j < 40; ++j) {
            double f = std::pow(10.0, 8.0 + 0.1 * j);
            double n = thermal_occupancy(f, t);
            if (n > 0.0) {
                EXPECT_LT(n, prev) << f << " " << t;
            }
            prev = n;
        }
    }
    for (int j = 0; j < 40; ++j) {
        double f = std::pow(10.0, 8.0 + 0.1 * j);
        double prev = -1.0;
        for (int i = 0; i < 40; ++i) {
            double t = std::pow(10.0, -1.0 + 0.1 * i);
            double n = thermal_occupancy(f, t);
            if (prev > 0.0) {
                EXPECT_GT(n, prev) << f << " " << t;
            }
            EXPECT_GE(n, prev);
            prev = n;
        }
    }
}

TEST(occupancy_to_excitation, examples) {
    EXPECT_EQ(occupancy_to_excitation(0.0), 0.0);
    EXPECT_EQ(occupancy_to_excitation(1.0), 0.5);
    EXPECT_NEAR(occupancy_to_excitation(603.9), 0.99835, 5e-6);
    EXPECT_LE(rel_err(occupancy_to_excitation(kRoomOccupancy), kRoomExcitation), 1e-15);
    EXPECT_THROW(occupancy_to_excitation(-1e-3), DegenerateInput);
    EXPECT_THROW(occupancy_to_excitation(INFINITY), DegenerateInput);
}

TEST(snr, examples) {
    // 1e-16 / 1e-15 rounds to the double just below 0.1.
    EXPECT_LE(std::abs(snr(1e-16, 1e-15) - 0.1), std::nextafter(0.1, 1.0) - 0.1);
    EXPECT_EQ(snr(3e-12, 3e-12), 1.0);
    EXPECT_EQ(snr(2e-16, 1e-16), 2.0);
    EXPECT_THROW(snr(0.0, 1.0), DegenerateInput);
    EXPECT_THROW(snr(1.0, 0.0), DegenerateInput);
}

TEST(range_multiplier, examples) {
    EXPECT_LE(rel_err(range_multiplier(100.0), 3.16), 1e-3);
    EXPECT_NEAR(range_multiplier(100.0), 3.1622776601683795, 1e-15);
    EXPECT_EQ(range_multiplier(1.0), 1.0);
    EXPECT_EQ(range_multiplier(16.0), 2.0);
    EXPECT_THROW(range_multiplier(0.0), DegenerateInput);
}

TEST(range_multiplier, multiplicative) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> exponent(-6.0, 6.0);
    for (int k = 0; k < 1000; ++k) {
        double a = std::pow(10.0, exponent(rng));
        double b = std::pow(10.0, exponent(rng));
        EXPECT_LE(rel_err(range_multiplier(a * b), range_multiplier(a) * range_multiplier(b)), 1e-12);
    }
}

TEST(shielding_effectiveness, examples) {
    EXPECT_EQ(shielding_effectiveness(0.03, 0.03), 0.0);
    EXPECT_NEAR(shielding_effectiveness(0.3, 0.03), 20.0, 1e-12);
    EXPECT_NEAR(shielding_effectiveness(0.0003, 0.03), -40.0, 1e-12);
    EXPECT_THROW(shielding_effectiveness(0.0, 0.03), DegenerateInput);
    EXPECT_THROW(shielding_effectiveness(0.01, -0.03), DegenerateInput);
}

TEST(isolation_factor, examples) {
    EXPECT_EQ(isolation_factor(100.0, 1.0), 100.0);
    EXPECT_EQ(isolation_factor(7.5, 7.5), 1.0);
    EXPECT_NEAR(isolation_factor(5e-3, 2.5e-4), 20.0, 1e-12);
    EXPECT_THROW(isolation_factor(1.0, 0.0), DegenerateInput);
}

TEST(stopband_attenuation, examples) {
    EXPECT_EQ(stopband_attenuation(0.4, 0.4), 0.0);
    EXPECT_NEAR(stopband_attenuation(10.0, 1.0), 20.0, 1e-12);
    EXPECT_NEAR(stopband_attenuation(0.01, 1.0), -40.0, 1e-12);
    EXPECT_THROW(stopband_attenuation(-0.01, 1.0), DegenerateInput);
}

TEST(evaluate_link_budget, computes_what_is_given) {
    LinkBudgetInputs in;
    in.power_w = 1e-16;
    in.noise_power_w = 1e-15;
    in.frequency_hz = 1e10;
    std::vector<std::string> warnings;
    LinkBudgetOutputs out = evaluate_link_budget(in, warnings);
    EXPECT_EQ(out.power_dbm, -130.0);
    EXPECT_EQ(out.noise_power_dbm, -120.0);
    EXPECT_NEAR(*out.snr, 0.1, 1e-16);
    EXPECT_LE(rel_err(*out.photon_rate_per_s, 1.5e7), 0.01);
    EXPECT_TRUE(out.photon_energy_j.has_value());
    EXPECT_FALSE(out.thermal_occupancy.has_value());
    EXPECT_FALSE(out.shielding_effectiveness_db.has_value());
    EXPECT_FALSE(out.range_multiplier.has_value());
    EXPECT_TRUE(warnings.empty());
}

TEST(evaluate_link_budget, warnings_for_questionable_regimes) {
    LinkBudgetInputs in;
    in.frequency_hz = 1e10;
    in.temperature_k = 290.0;
    in.shield_thickness_m = 0.0003;
    in.wavelength_m = 0.03;
    in.amplitude_stop = 0.01;
    in.amplitude_pass = 1.0;
    std::vector<std::string> warnings;
    LinkBudgetOutputs out = evaluate_link_budget(in, warnings);
    EXPECT_LE(rel_err(*out.thermal_occupancy, kRoomOccupancy), 1e-13);
    EXPECT_LE(rel_err(*out.noise_excitation, kRoomExcitation), 1e-13);
    EXPECT_NEAR(*out.shielding_effectiveness_db, -40.0, 1e-12);
    EXPECT_NEAR(*out.stopband_attenuation_db, -40.0, 1e-12);
    EXPECT_EQ(warnings.size(), 3u);
}
