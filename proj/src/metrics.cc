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

#include "qradar/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qradar/errors.h"

namespace qradar {

namespace {

constexpr double kClampWindow = 1e-9;

void check_same_dims(const DensityOperator &a, const DensityOperator &b) {
    if (a.dim() != b.dim() || a.dims() != b.dims()) {
        throw DimensionMismatch("states live on different spaces");
    }
}

}  // namespace

void validate_priors(const Priors &priors) {
    if (!std::isfinite(priors.h0) || !std::isfinite(priors.h1) || priors.h0 < 0.0 || priors.h1 < 0.0) {
        throw DegenerateInput("priors must be finite and non-negative");
    }
    if (std::abs(priors.h0 + priors.h1 - 1.0) > 1e-12) {
        throw DegenerateInput("priors must sum to 1");
    }
}

double clamp_metric(double value, double lo, double hi, const char *what) {
    if (std::isnan(value) || value < lo - kClampWindow || value > hi + kClampWindow) {
        throw NumericalDomain(std::string(what) + " = " + std::to_string(value) + " is outside [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "] beyond roundoff");
    }
    return std::clamp(value, lo, hi);
}

double trace_norm(const Matrix &hermitian) {
    return eigendecompose_hermitian(hermitian).eigenvalues.cwiseAbs().sum();
}

double trace_distance(const DensityOperator &a, const DensityOperator &b) {
    check_same_dims(a, b);
    return clamp_metric(0.5 * trace_norm(a.matrix() - b.matrix()), 0.0, 1.0, "trace distance");
}

double fidelity(const DensityOperator &a, const DensityOperator &b) {
    check_same_dims(a, b);
    Matrix root_a = sqrt_psd(a.matrix());
    Matrix inner = root_a * b.matrix() * root_a;
    // The product is Hermitian up to roundoff; the eigensolver symmetrizes it.
    double root_trace = sqrt_psd(inner).trace().real();
    return clamp_metric(root_trace * root_trace, 0.0, 1.0, "fidelity");
}

double helstrom_error(const DensityOperator &a, const DensityOperator &b, const Priors &priors) {
    check_same_dims(a, b);
    validate_priors(priors);
    Matrix weighted = priors.h1 * b.matrix() - priors.h0 * a.matrix();
    double pe = 0.5 * (1.0 - trace_norm(weighted));
    return clamp_metric(pe, 0.0, std::max(priors.h0, priors.h1), "Helstrom error");
}

DistinguishabilityReport distinguishability(const DensityOperator &a, const DensityOperator &b,
                                            const Priors &priors) {
    return {trace_distance(a, b), fidelity(a, b), helstrom_error(a, b, priors), priors};
}

}  // namespace qradar
