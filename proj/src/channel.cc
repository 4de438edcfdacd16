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

#include "qradar/channel.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qradar/errors.h"

namespace qradar {

double reduce_phase(double phase_rad) {
    if (!std::isfinite(phase_rad)) {
        throw DegenerateInput("phase must be finite");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(phase_rad, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // -tiny + 2pi can round up to exactly 2pi.
    if (r >= two_pi) {
        r = 0.0;
    }
    return r;
}

TargetParams::TargetParams(double phase_rad, double reflectivity, double noise_excitation)
    : phase_rad_(reduce_phase(phase_rad)), reflectivity_(reflectivity), noise_excitation_(noise_excitation) {
    if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
        throw DegenerateInput("reflectivity must lie in [0, 1], got " + std::to_string(reflectivity));
    }
    if (!(noise_excitation >= 0.0 && noise_excitation < 1.0)) {
        throw DegenerateInput("noise excitation must lie in [0, 1), got " + std::to_string(noise_excitation));
    }
}

PureState apply_signal_phase(const PureState &psi, double phase_rad) {
    if (psi.dims() != Dims{2, 2}) {
        throw DimensionMismatch("apply_signal_phase expects a signal (x) idler qubit pair with dims [2, 2]");
    }
    const Complex shift = std::polar(1.0, reduce_phase(phase_rad));
    Vector amps = psi.amplitudes();
    // Signal is subsystem 0, so |1>_S covers basis indices 2 and 3.
    amps(2) *= shift;
    amps(3) *= shift;
    return PureState(std::move(amps), psi.dims());
}

DensityOperator noise_state(double p) {
    if (!(p >= 0.0 && p < 1.0)) {
        throw DegenerateInput("noise excitation must lie in [0, 1), got " + std::to_string(p));
    }
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0 - p;
    m(1, 1) = p;
    return DensityOperator(std::move(m), {2});
}

DensityOperator hypothesis_h0(double noise_excitation) {
    DensityOperator idler(Matrix::Identity(2, 2) * 0.5, {2});
    return tensor(noise_state(noise_excitation), idler);
}

DensityOperator hypothesis_h1(const TargetParams &params) {
    DensityOperator rho0 = hypothesis_h0(params.noise_excitation());
    DensityOperator ret = density_from_pure(apply_signal_phase(bell_phi_plus(), params.phase_rad()));
    const double eta = params.reflectivity();
    if (eta == 1.0) {
        return ret;
    }
    if (eta == 0.0) {
        return rho0;
    }
    return DensityOperator(eta * ret.matrix() + (1.0 - eta) * rho0.matrix(), {2, 2});
}

}  // namespace qradar
