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

#ifndef QRADAR_REPORT_H
#define QRADAR_REPORT_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qradar/detector.h"
#include "qradar/linkbudget.h"
#include "qradar/scenario.h"

namespace qradar {

struct MonteCarloSummary {
    uint64_t trials = 0;
    uint64_t seed = 0;
    TrialOutcome under_h0;
    TrialOutcome under_h1;
    double empirical_error = 0.0;
    double sigma = 0.0;

    bool operator==(const MonteCarloSummary &) const = default;
};

struct DetectionReport {
    Scenario scenario;
    double effective_phase_rad = 0.0;
    double noise_excitation = 0.0;
    double trace_distance = 0.0;
    double fidelity = 1.0;
    double helstrom_error = 0.5;
    std::optional<MonteCarloSummary> monte_carlo;
    std::optional<std::vector<RocPoint>> roc;
    std::optional<LinkBudgetOutputs> link_budget;
    std::vector<std::string> warnings;

    bool operator==(const DetectionReport &) const = default;
};

enum class ReportFormat { Table, Structured };

/// Structured output is a JSON document whose doubles use the shortest
/// representation that round-trips exactly. Table output rounds to 6
/// significant digits.
std::string emit_report(const DetectionReport &report, ReportFormat format);

/// Inverse of emit_report(..., Structured). Throws ParseError on malformed input.
DetectionReport parse_structured_report(std::string_view text);

/// Header `threshold,p_false_alarm,p_detection` followed by one row per point.
std::string emit_roc_csv(std::span<const RocPoint> points);

}  // namespace qradar

#endif
