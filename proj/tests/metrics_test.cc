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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qradar/channel.h"
#include "qradar/errors.h"

using namespace qradar;
using qradar::testing::RandomStates;

namespace {

constexpr double kPi = std::numbers::pi;

DensityOperator ket(int k) {
    Matrix m = Matrix::Zero(2, 2);
    m(k, k) = 1.0;
    return DensityOperator(m, {2});
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

DensityOperator shifted_bell(double phi) {
    return density_from_pure(apply_signal_phase(bell_phi_plus(), phi));
}

}  // namespace

TEST(trace_distance, basic_cases) {
    DensityOperator bell = shifted_bell(0.0);
    EXPECT_NEAR(trace_distance(bell, bell), 0.0, 1e-15);
    EXPECT_NEAR(trace_distance(ket(0), ket(1)), 1.0, 1e-15);
    EXPECT_NEAR(trace_distance(bell, shifted_bell(kPi / 2)), std::sin(kPi / 4), 1e-12);
    EXPECT_NEAR(qradar::testing::oracle_trace_distance(bell.matrix(), shifted_bell(kPi / 2).matrix()),
                std::sin(kPi / 4), 1e-12);
}

TEST(trace_distance, dimension_mismatch) {
    EXPECT_THROW(trace_distance(ket(0), shifted_bell(0.0)), DimensionMismatch);
    DensityOperator as_ququart(Matrix::Identity(4, 4) / 4.0, {4});
    EXPECT_THROW(trace_distance(as_ququart, hypothesis_h0(0.5)), DimensionMismatch);
}

TEST(fidelity, basic_cases) {
    DensityOperator bell = shifted_bell(0.0);
    EXPECT_NEAR(fidelity(bell, bell), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(ket(0), ket(1)), 0.0, 1e-15);
    for (double phi : {kPi / 3, kPi / 2, kPi}) {
        double c = std::cos(phi / 2);
        EXPECT_NEAR(fidelity(bell, shifted_bell(phi)), c * c, 1e-10);
    }
}

TEST(fidelity, mixed_commuting_states) {
    // For commuting states F = (sum sqrt(p_i q_i))^2.
    Matrix a = Matrix::Zero(3, 3), b = Matrix::Zero(3, 3);
    a.diagonal() << 0.2, 0.3, 0.5;
    b.diagonal() << 0.6, 0.1, 0.3;
    double root = std::sqrt(0.2 * 0.6) + std::sqrt(0.3 * 0.1) + std::sqrt(0.5 * 0.3);
    EXPECT_NEAR(fidelity(DensityOperator(a, {3}), DensityOperator(b, {3})), root * root, 1e-13);
}

TEST(helstrom_error, basic_cases) {
    DensityOperator bell = shifted_bell(0.0);
    EXPECT_NEAR(helstrom_error(bell, bell), 0.5, 1e-15);
    EXPECT_NEAR(helstrom_error(ket(0), ket(1)), 0.0, 1e-15);
    double closed = 0.5 * (1.0 - std::sqrt(1.0 - std::pow(std::cos(kPi / 4), 2)));
    EXPECT_NEAR(helstrom_error(bell, shifted_bell(kPi / 2)), closed, 1e-12);
    EXPECT_NEAR(helstrom_error(bell, shifted_bell(kPi / 2)), 0.1464466094067262, 1e-12);
}

TEST(helstrom_error, unequal_priors) {
    // Identical states: the best guess is the likelier hypothesis.
    DensityOperator rho = hypothesis_h0(0.3);
    EXPECT_NEAR(helstrom_error(rho, rho, {0.8, 0.2}), 0.2, 1e-15);
    EXPECT_NEAR(helstrom_error(ket(0), ket(1), {0.3, 0.7}), 0.0, 1e-15);
    // Degenerate priors never err.
    EXPECT_NEAR(helstrom_error(rho, hypothesis_h1(TargetParams(1.0, 0.5, 0.3)), {1.0, 0.0}), 0.0, 1e-15);
}

TEST(helstrom_error, invalid_priors) {
    DensityOperator rho = hypothesis_h0(0.3);
    EXPECT_THROW(helstrom_error(rho, rho, {0.6, 0.6}), DegenerateInput);
    EXPECT_THROW(helstrom_error(rho, rho, {-0.1, 1.1}), DegenerateInput);
    EXPECT_THROW(helstrom_error(rho, rho, {NAN, 0.5}), DegenerateInput);
}

TEST(clamp_metric, window) {
    EXPECT_EQ(clamp_metric(-5e-10, 0.0, 1.0, "x"), 0.0);
    EXPECT_EQ(clamp_metric(1.0 + 5e-10, 0.0, 1.0, "x"), 1.0);
    EXPECT_EQ(clamp_metric(0.25, 0.0, 1.0, "x"), 0.25);
    EXPECT_THROW(clamp_metric(-2e-9, 0.0, 1.0, "x"), NumericalDomain);
    EXPECT_THROW(clamp_metric(1.0 + 2e-9, 0.0, 1.0, "x"), NumericalDomain);
    EXPECT_THROW(clamp_metric(NAN, 0.0, 1.0, "x"), NumericalDomain);
}

TEST(metric_properties, symmetry_ranges_and_fuchs_van_de_graaff) {
    RandomStates gen(31);
    for (int k = 0; k < 200; ++k) {
        DensityOperator a = gen.mixed({2, 2}, gen.integer(1, 4));
        DensityOperator b = gen.mixed({2, 2}, gen.integer(1, 4));
        double d = trace_distance(a, b);
        double f = fidelity(a, b);
        EXPECT_NEAR(d, trace_distance(b, a), 1e-9);
        EXPECT_NEAR(f, fidelity(b, a), 1e-9);
        EXPECT_NEAR(d, qradar::testing::oracle_trace_distance(a.matrix(), b.matrix()), 1e-9);
        EXPECT_GE(d, 0.0);
        EXPECT_LE(d, 1.0);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
        EXPECT_LE(1.0 - std::sqrt(f), d + 1e-7);
        EXPECT_LE(d, std::sqrt(1.0 - f) + 1e-7);
        EXPECT_NEAR(helstrom_error(a, b), 0.5 * (1.0 - d), 1e-12);
    }
}

TEST(metric_properties, triangle_inequality_and_indiscernibles) {
    RandomStates gen(32);
    for (int k = 0; k < 200; ++k) {
        DensityOperator a = gen.mixed({2, 2});
        DensityOperator b = gen.mixed({2, 2});
        DensityOperator c = gen.mixed({2, 2});
        EXPECT_LE(trace_distance(a, c), trace_distance(a, b) + trace_distance(b, c) + 1e-9);
        EXPECT_LE(trace_distance(a, a), 1e-12);
        EXPECT_GT(trace_distance(a, b), 1e-9);
    }
}

TEST(metric_properties, local_unitary_invariance) {
    RandomStates gen(33);
    for (int k = 0; k < 200; ++k) {
        DensityOperator a = gen.mixed({2, 2}, gen.integer(1, 4));
        DensityOperator b = gen.mixed({2, 2}, gen.integer(1, 4));
        Matrix u = kron(gen.unitary(2), gen.unitary(2));
        DensityOperator ua = qradar::testing::conjugate(a, u);
        DensityOperator ub = qradar::testing::conjugate(b, u);
        EXPECT_NEAR(trace_distance(ua, ub), trace_distance(a, b), 1e-9);
        EXPECT_NEAR(fidelity(ua, ub), fidelity(a, b), 1e-9);
    }
}

TEST(metric_properties, pure_state_consistency) {
    RandomStates gen(34);
    for (int k = 0; k < 200; ++k) {
        PureState x = gen.pure({2, 2});
        PureState y = gen.pure({2, 2});
        double overlap = std::norm(x.amplitudes().dot(y.amplitudes()));
        DensityOperator a = density_from_pure(x);
        DensityOperator b = density_from_pure(y);
        EXPECT_NEAR(fidelity(a, b), overlap, 1e-8);
        EXPECT_NEAR(trace_distance(a, b), std::sqrt(1.0 - overlap), 1e-8);
    }
}

TEST(metric_properties, fuchs_van_de_graaff_on_channel_grid) {
    for (int i = 0; i <= 8; ++i) {
        for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            for (double p : {0.0, 0.25, 0.5, 0.9}) {
                DensityOperator rho0 = hypothesis_h0(p);
                DensityOperator rho1 = hypothesis_h1(TargetParams(i * kPi / 4, eta, p));
                DistinguishabilityReport r = distinguishability(rho0, rho1);
                EXPECT_LE(1.0 - std::sqrt(r.fidelity), r.trace_distance + 1e-7);
                EXPECT_LE(r.trace_distance, std::sqrt(1.0 - r.fidelity) + 1e-7);
                EXPECT_GE(r.helstrom_error, 0.0);
                EXPECT_LE(r.helstrom_error, 0.5);
            }
        }
    }
}
