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

#ifndef QRADAR_PIPELINE_H
#define QRADAR_PIPELINE_H

#include "qradar/report.h"
#include "qradar/scenario.h"

namespace qradar {

/// Runs the full detection pipeline for one scenario:
///   1. Bell pair, signal first.
///   2. Target phase (phase_rad - env_phase_rad) imprinted on the signal.
///   3-4. Hypothesis states rho0 / rho1 on the return (x) idler space.
///   5. Trace distance, fidelity and Helstrom error; Monte Carlo when
///      trials > 0; ROC when thresholds are given; link budget when present.
///
/// The result depends only on the scenario (including its seed), never on
/// `workers`. Library errors are rethrown with the scenario attached to the
/// message, keeping their type.
DetectionReport run_scenario(const Scenario &scenario, unsigned workers = 1);

}  // namespace qradar

#endif
