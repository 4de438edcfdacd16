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

// Binary target/no-target test: the Helstrom projective measurement, Monte
// Carlo realization of it, and a Neyman-Pearson threshold sweep.

#ifndef QRADAR_DETECTOR_H
#define QRADAR_DETECTOR_H

#include <cstdint>
#include <span>
#include <vector>

#include "qradar/metrics.h"
#include "qradar/qstate.h"

namespace qradar {

/// Eigenvalues of the decision operator at or below this go to "no target".
inline constexpr double kDecisionTieWindow = 1e-10;

enum class Hypothesis { H0, H1 };

/// Two complementary orthogonal projectors.
struct BinaryMeasurement {
    Matrix project_h1;  ///< decide "target present"
    Matrix project_h0;  ///< decide "no target"
};

struct TrialOutcome {
    uint64_t decide_h1_count = 0;
    uint64_t decide_h0_count = 0;
    uint64_t trials = 0;
    Hypothesis true_hypothesis = Hypothesis::H0;
    uint64_t seed = 0;

    bool operator==(const TrialOutcome &) const = default;
};

struct RocPoint {
    double threshold;
    double p_false_alarm;
    double p_detection;

    bool operator==(const RocPoint &) const = default;
};

/// Result of a prior-weighted Monte Carlo error estimate.
struct EmpiricalError {
    double error;          ///< pi0 * (false alarms / n0) + pi1 * (misses / n1)
    double analytic;       ///< the same expression with exact Born probabilities
    double sigma;          ///< binomial standard deviation of `error`
    TrialOutcome under_h0;
    TrialOutcome under_h1;
};

/// Projects onto the strictly positive eigenspace of pi1*rho1 - pi0*rho0.
BinaryMeasurement helstrom_measurement(const DensityOperator &rho0, const DensityOperator &rho1,
                                       const Priors &priors = {});

/// Tr(project_h1 * rho), clamped to [0, 1].
double born_probability(const BinaryMeasurement &m, const DensityOperator &rho);

/// pi0 * Tr(P1 rho0) + pi1 * Tr(P0 rho1).
double analytic_error(const BinaryMeasurement &m, const DensityOperator &rho0, const DensityOperator &rho1,
                      const Priors &priors = {});

/// `trials` Bernoulli draws with success probability born_probability(m, rho_true).
/// Trial k uses SplitMix64 output k of `seed`; `workers` threads split the trials
/// into contiguous ranges and the counts do not depend on `workers`.
TrialOutcome simulate_trials(const BinaryMeasurement &m, const DensityOperator &rho_true, uint64_t trials,
                             uint64_t seed, Hypothesis truth = Hypothesis::H1, unsigned workers = 1);

/// floor(pi0 * trials) trials run under rho0 (seed stream 0), the rest under
/// rho1 (seed stream 1), both measured with the Helstrom measurement.
EmpiricalError empirical_error(const DensityOperator &rho0, const DensityOperator &rho1, const Priors &priors,
                               uint64_t trials, uint64_t seed, unsigned workers = 1);

/// One point per threshold t, using the positive eigenspace of rho1 - t*rho0.
std::vector<RocPoint> roc_sweep(const DensityOperator &rho0, const DensityOperator &rho1,
                                std::span<const double> thresholds);

}  // namespace qradar

#endif
