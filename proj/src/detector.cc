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

#include "qradar/detector.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "qradar/errors.h"
#include "qradar/rng.h"

namespace qradar {

namespace {

void check_same_dims(const DensityOperator &a, const DensityOperator &b) {
    if (a.dims() != b.dims()) {
        throw DimensionMismatch("hypothesis states live on different spaces");
    }
}

BinaryMeasurement positive_part_measurement(const Matrix &decision) {
    Spectrum spec = eigendecompose_hermitian(decision);
    Matrix p1 = projector_above(spec, kDecisionTieWindow);
    Matrix p0 = Matrix::Identity(decision.rows(), decision.cols()) - p1;
    return {std::move(p1), std::move(p0)};
}

uint64_t count_successes(double p, uint64_t seed, uint64_t begin, uint64_t end) {
    uint64_t hits = 0;
    for (uint64_t k = begin; k < end; ++k) {
        hits += unit_interval(SplitMix64::at(seed, k)) < p ? 1 : 0;
    }
    return hits;
}

}  // namespace

BinaryMeasurement helstrom_measurement(const DensityOperator &rho0, const DensityOperator &rho1,
                                       const Priors &priors) {
    check_same_dims(rho0, rho1);
    validate_priors(priors);
    return positive_part_measurement(priors.h1 * rho1.matrix() - priors.h0 * rho0.matrix());
}

double born_probability(const BinaryMeasurement &m, const DensityOperator &rho) {
    if (m.project_h1.rows() != static_cast<Eigen::Index>(rho.dim())) {
        throw DimensionMismatch("measurement and state dimensions differ");
    }
    double p = (m.project_h1 * rho.matrix()).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

double analytic_error(const BinaryMeasurement &m, const DensityOperator &rho0, const DensityOperator &rho1,
                      const Priors &priors) {
    check_same_dims(rho0, rho1);
    validate_priors(priors);
    double false_alarm = born_probability(m, rho0);
    double miss = 1.0 - born_probability(m, rho1);
    return priors.h0 * false_alarm + priors.h1 * miss;
}

TrialOutcome simulate_trials(const BinaryMeasurement &m, const DensityOperator &rho_true, uint64_t trials,
                             uint64_t seed, Hypothesis truth, unsigned workers) {
    if (trials == 0) {
        throw DegenerateInput("simulate_trials needs at least one trial");
    }
    const double p = born_probability(m, rho_true);
    workers = std::max(1u, workers);
    if (workers > trials) {
        workers = static_cast<unsigned>(trials);
    }

    uint64_t hits = 0;
    if (workers == 1) {
        hits = count_successes(p, seed, 0, trials);
    } else {
        std::vector<uint64_t> partial(workers, 0);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                uint64_t begin = trials * w / workers;
                uint64_t end = trials * (w + 1) / workers;
                pool.emplace_back([&partial, w, p, seed, begin, end] { partial[w] = count_successes(p, seed, begin, end); });
            }
        }
        for (uint64_t h : partial) {
            hits += h;
        }
    }
    return TrialOutcome{hits, trials - hits, trials, truth, seed};
}

EmpiricalError empirical_error(const DensityOperator &rho0, const DensityOperator &rho1, const Priors &priors,
                               uint64_t trials, uint64_t seed, unsigned workers) {
    check_same_dims(rho0, rho1);
    validate_priors(priors);
    if (trials == 0) {
        throw DegenerateInput("empirical_error needs at least one trial");
    }
    const uint64_t n0 = static_cast<uint64_t>(std::floor(priors.h0 * static_cast<double>(trials)));
    const uint64_t n1 = trials - n0;
    if ((priors.h0 > 0.0 && n0 == 0) || (priors.h1 > 0.0 && n1 == 0)) {
        throw DegenerateInput("too few trials (" + std::to_string(trials) + ") to cover both hypotheses");
    }

    BinaryMeasurement m = helstrom_measurement(rho0, rho1, priors);
    const double p_fa = born_probability(m, rho0);
    const double p_miss = 1.0 - born_probability(m, rho1);

    EmpiricalError out{};
    out.analytic = priors.h0 * p_fa + priors.h1 * p_miss;
    out.under_h0 = TrialOutcome{0, 0, 0, Hypothesis::H0, derive_seed(seed, 0)};
    out.under_h1 = TrialOutcome{0, 0, 0, Hypothesis::H1, derive_seed(seed, 1)};
    double error = 0.0;
    double variance = 0.0;
    if (n0 > 0) {
        out.under_h0 = simulate_trials(m, rho0, n0, out.under_h0.seed, Hypothesis::H0, workers);
        error += priors.h0 * static_cast<double>(out.under_h0.decide_h1_count) / static_cast<double>(n0);
        variance += priors.h0 * priors.h0 * p_fa * (1.0 - p_fa) / static_cast<double>(n0);
    }
    if (n1 > 0) {
        out.under_h1 = simulate_trials(m, rho1, n1, out.under_h1.seed, Hypothesis::H1, workers);
        error += priors.h1 * static_cast<double>(out.under_h1.decide_h0_count) / static_cast<double>(n1);
        variance += priors.h1 * priors.h1 * p_miss * (1.0 - p_miss) / static_cast<double>(n1);
    }
    out.error = error;
    out.sigma = std::sqrt(variance);
    return out;
}

std::vector<RocPoint> roc_sweep(const DensityOperator &rho0, const DensityOperator &rho1,
                                std::span<const double> thresholds) {
    check_same_dims(rho0, rho1);
    std::vector<RocPoint> points;
    points.reserve(thresholds.size());
    for (double t : thresholds) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw DegenerateInput("ROC thresholds must be finite and non-negative");
        }
        BinaryMeasurement m = positive_part_measurement(rho1.matrix() - t * rho0.matrix());
        points.push_back({t, born_probability(m, rho0), born_probability(m, rho1)});
    }
    return points;
}

}  // namespace qradar
