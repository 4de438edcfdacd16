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

// Finite-dimensional state representation and the dense linear-algebra
// kernels the rest of the library is built on.
//
// Multi-mode spaces use row-major Kronecker ordering: for dims [d0, d1, ...]
// the basis index of |i0 i1 ...> is i0*d1*d2*... + i1*d2*... + ...
// Subsystem 0 is always the signal (or return) mode, subsystem 1 the idler.

#ifndef QRADAR_QSTATE_H
#define QRADAR_QSTATE_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qradar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

inline constexpr std::size_t kMaxHilbertDim = 16;

namespace tol {
/// Hermiticity, trace and positivity of a state.
inline constexpr double kState = 1e-9;
/// Decomposition round trips; also the Hermiticity accepted by the eigensolver.
inline constexpr double kRoundTrip = 1e-8;
/// Eigenvalues in [-kEigenClamp, 0) are roundoff and clamp to zero.
inline constexpr double kEigenClamp = 1e-10;
}  // namespace tol

/// Normalized amplitude vector over a tensor-product space.
class PureState {
   public:
    /// Normalizes `amplitudes`. Throws DegenerateInput on a zero vector and
    /// DimensionMismatch when the length disagrees with the product of `dims`.
    PureState(Vector amplitudes, Dims dims);

    const Vector &amplitudes() const {
        return amplitudes_;
    }
    const Dims &dims() const {
        return dims_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(amplitudes_.size());
    }

   private:
    Vector amplitudes_;
    Dims dims_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Construction validates
/// all three within tol::kState.
class DensityOperator {
   public:
    /// Throws DimensionMismatch on shape problems and NumericalDomain when the
    /// matrix is not a state.
    DensityOperator(Matrix matrix, Dims dims);

    const Matrix &matrix() const {
        return matrix_;
    }
    const Dims &dims() const {
        return dims_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(matrix_.rows());
    }
    /// Tr(rho^2).
    double purity() const;

   private:
    Matrix matrix_;
    Dims dims_;
};

/// Eigenvalues in descending order with the matching unit eigenvectors as columns.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;
};

PureState pure_state(Vector amplitudes, Dims dims);

/// (|0>_S|0>_I + |1>_S|1>_I)/sqrt(2) with dims [2, 2], signal first.
PureState bell_phi_plus();

/// |psi><psi|.
DensityOperator density_from_pure(const PureState &psi);

/// Kronecker product; dims are concatenated.
DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);

/// Traces out every subsystem not listed in `keep`. Kept subsystems stay in
/// ascending index order. Throws DimensionMismatch on an out-of-range or
/// repeated index.
DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> keep);

/// Throws NumericalDomain if `m` is not square or not Hermitian within tol::kRoundTrip.
Spectrum eigendecompose_hermitian(const Matrix &m);

/// Principal square root of a PSD matrix. Throws NumericalDomain on an
/// eigenvalue below -tol::kEigenClamp. Eigenvalues within 16*n*eps of zero,
/// relative to the spectral radius, are treated as exactly zero.
Matrix sqrt_psd(const Matrix &m);

/// Sum of v v^dagger over eigenvectors whose eigenvalue is strictly above `threshold`.
Matrix projector_above(const Spectrum &spectrum, double threshold);

double max_abs_entry(const Matrix &m);

/// max |M - M^dagger| entry.
double hermiticity_error(const Matrix &m);

std::size_t dims_product(const Dims &dims);

}  // namespace qradar

#endif
