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

// Target interaction and background noise. Both hypotheses live on the same
// 4-dimensional "return mode (x) idler" space, return mode first:
//
//   H0:  rho0 = noise(p) (x) I/2
//   H1:  rho1 = eta |psi_phi><psi_phi| + (1 - eta) rho0
//
// where |psi_phi> = (|00> + e^{i phi}|11>)/sqrt(2) and I/2 is the idler's
// reduced Bell state. eta = 1 gives the pure entangled return.

#ifndef QRADAR_CHANNEL_H
#define QRADAR_CHANNEL_H

#include "qradar/qstate.h"

namespace qradar {

/// Maps any finite angle into [0, 2*pi).
double reduce_phase(double phase_rad);

class TargetParams {
   public:
    /// Throws DegenerateInput unless phase is finite, reflectivity is in [0, 1]
    /// and noise_excitation is in [0, 1).
    TargetParams(double phase_rad, double reflectivity, double noise_excitation);

    /// Reduced to [0, 2*pi).
    double phase_rad() const {
        return phase_rad_;
    }
    double reflectivity() const {
        return reflectivity_;
    }
    double noise_excitation() const {
        return noise_excitation_;
    }

   private:
    double phase_rad_;
    double reflectivity_;
    double noise_excitation_;
};

/// Multiplies every amplitude whose signal digit is |1> by e^{i phi}.
/// Requires dims [2, 2]; throws DimensionMismatch otherwise.
PureState apply_signal_phase(const PureState &psi, double phase_rad);

/// diag(1 - p, p). Throws DegenerateInput unless p is in [0, 1).
DensityOperator noise_state(double p);

DensityOperator hypothesis_h0(double noise_excitation);
DensityOperator hypothesis_h1(const TargetParams &params);

}  // namespace qradar

#endif
