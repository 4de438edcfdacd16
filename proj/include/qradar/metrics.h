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

#ifndef QRADAR_METRICS_H
#define QRADAR_METRICS_H

#include "qradar/qstate.h"

namespace qradar {

/// Prior probabilities of "no target" (h0) and "target" (h1).
struct Priors {
    double h0 = 0.5;
    double h1 = 0.5;

    bool operator==(const Priors &) const = default;
};

/// Throws DegenerateInput unless both priors are finite, non-negative and sum to 1 within 1e-12.
void validate_priors(const Priors &priors);

struct DistinguishabilityReport {
    double trace_distance;
    double fidelity;
    double helstrom_error;
    Priors priors;
};

/// Sum of |eigenvalue| of a Hermitian matrix.
double trace_norm(const Matrix &hermitian);

/// 1/2 ||a - b||_1.
double trace_distance(const DensityOperator &a, const DensityOperator &b);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityOperator &a, const DensityOperator &b);

/// Minimum error probability 1/2 (1 - ||pi1 b - pi0 a||_1) for deciding
/// between a (prior pi0) and b (prior pi1).
double helstrom_error(const DensityOperator &a, const DensityOperator &b, const Priors &priors = {});

DistinguishabilityReport distinguishability(const DensityOperator &a, const DensityOperator &b,
                                            const Priors &priors = {});

/// Clamps roundoff excursions of at most 1e-9 outside [lo, hi] back into the
/// interval; anything further out throws NumericalDomain naming `what`.
double clamp_metric(double value, double lo, double hi, const char *what);

}  // namespace qradar

#endif
