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

// Scenario documents. The grammar is line oriented:
//
//   document   := { line }
//   line       := blank | comment | section | entry
//   comment    := '#' text
//   section    := '[link_budget]'
//   entry      := key '=' value [ '#' text ]
//   value      := number | number { ',' number }
//
// Keys before any section are scenario keys; keys after `[link_budget]`
// belong to the link-budget group. Keys may appear at most once. Angles are
// radians. See README.md for the key list.

#ifndef QRADAR_SCENARIO_H
#define QRADAR_SCENARIO_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qradar/linkbudget.h"
#include "qradar/metrics.h"

namespace qradar {

/// Background noise specified by temperature instead of a direct excitation probability.
struct ThermalNoise {
    double frequency_hz;
    double temperature_k;

    bool operator==(const ThermalNoise &) const = default;
};

struct Scenario {
    double phase_rad = 0.0;
    double reflectivity = 1.0;
    /// Always filled after parsing; derived from `thermal` when that is set.
    double noise_excitation = 0.0;
    std::optional<ThermalNoise> thermal;
    double env_phase_rad = 0.0;
    Priors priors;
    /// 0 means analytic metrics only.
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::optional<std::vector<double>> roc_thresholds;
    std::optional<LinkBudgetInputs> link_budget;

    bool operator==(const Scenario &) const = default;
};

/// Throws ParseError for malformed text (including unknown or repeated keys)
/// and ValidationError for constraint violations.
Scenario parse_scenario(std::string_view text);

/// Checks every field constraint and derives noise_excitation from `thermal`
/// when present. Throws ValidationError naming the first bad field.
void validate_scenario(Scenario &s);

}  // namespace qradar

#endif
