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

#include "qradar/pipeline.h"

#include <sstream>

#include "qradar/channel.h"
#include "qradar/errors.h"
#include "qradar/metrics.h"

namespace qradar {

namespace {

std::string context(const Scenario &s) {
    std::ostringstream out;
    out.precision(17);
    out << "scenario(phase_rad=" << s.phase_rad << ", env_phase_rad=" << s.env_phase_rad
        << ", reflectivity=" << s.reflectivity << ", noise_excitation=" << s.noise_excitation << ", trials=" << s.trials
        << ", seed=" << s.seed << "): ";
    return out.str();
}

DetectionReport run_unchecked(const Scenario &s, unsigned workers) {
    DetectionReport r;
    r.scenario = s;

    TargetParams target(s.phase_rad - s.env_phase_rad, s.reflectivity, s.noise_excitation);
    r.effective_phase_rad = target.phase_rad();
    r.noise_excitation = target.noise_excitation();

    if (s.thermal) {
        double nbar = thermal_occupancy(s.thermal->frequency_hz, s.thermal->temperature_k);
        if (nbar > kSaturatedOccupancy) {
            r.warnings.push_back("noise_excitation: derived from a thermal occupancy far above 1; the qubit noise "
                                 "model saturates and H0 approaches |1><1| (x) I/2");
        }
    }

    const DensityOperator rho0 = hypothesis_h0(target.noise_excitation());
    const DensityOperator rho1 = hypothesis_h1(target);

    r.trace_distance = trace_distance(rho0, rho1);
    r.fidelity = fidelity(rho0, rho1);
    r.helstrom_error = helstrom_error(rho0, rho1, s.priors);

    if (s.trials > 0) {
        EmpiricalError e = empirical_error(rho0, rho1, s.priors, s.trials, s.seed, workers);
        r.monte_carlo = MonteCarloSummary{s.trials, s.seed, e.under_h0, e.under_h1, e.error, e.sigma};
    }
    if (s.roc_thresholds) {
        r.roc = roc_sweep(rho0, rho1, *s.roc_thresholds);
    }
    if (s.link_budget) {
        r.link_budget = evaluate_link_budget(*s.link_budget, r.warnings);
    }
    return r;
}

}  // namespace

DetectionReport run_scenario(const Scenario &scenario, unsigned workers) {
    try {
        return run_unchecked(scenario, workers);
    } catch (const DegenerateInput &e) {
        throw DegenerateInput(context(scenario) + e.what());
    } catch (const DimensionMismatch &e) {
        throw DimensionMismatch(context(scenario) + e.what());
    } catch (const NumericalDomain &e) {
        throw NumericalDomain(context(scenario) + e.what());
    }
}

}  // namespace qradar
