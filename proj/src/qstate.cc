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

#include "qradar/qstate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qradar/errors.h"

namespace qradar {

namespace {

void check_dims(const Dims &dims, std::size_t length) {
    if (dims.empty()) {
        throw DimensionMismatch("dims must name at least one subsystem");
    }
    for (std::size_t d : dims) {
        if (d == 0) {
            throw DimensionMismatch("subsystem dimension must be positive");
        }
    }
    std::size_t total = dims_product(dims);
    if (total != length) {
        throw DimensionMismatch(
            "product of dims is " + std::to_string(total) + " but the data has length " + std::to_string(length));
    }
    if (total > kMaxHilbertDim) {
        throw DimensionMismatch("Hilbert dimension " + std::to_string(total) + " exceeds " + std::to_string(kMaxHilbertDim));
    }
}

}  // namespace

std::size_t dims_product(const Dims &dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) {
        total *= d;
        if (total > kMaxHilbertDim * kMaxHilbertDim) {
            break;
        }
    }
    return total;
}

double max_abs_entry(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_error(const Matrix &m) {
    return max_abs_entry(m - m.adjoint());
}

PureState::PureState(Vector amplitudes, Dims dims) : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    check_dims(dims_, static_cast<std::size_t>(amplitudes_.size()));
    double norm = amplitudes_.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DegenerateInput("amplitude vector has zero (or non-finite) norm");
    }
    amplitudes_ /= norm;
}

DensityOperator::DensityOperator(Matrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw DimensionMismatch("density matrix must be square");
    }
    check_dims(dims_, static_cast<std::size_t>(matrix_.rows()));
    if (!matrix_.allFinite()) {
        throw NumericalDomain("density matrix has non-finite entries");
    }
    double herm = hermiticity_error(matrix_);
    if (herm > tol::kState) {
        throw NumericalDomain("density matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(herm) + ")");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol::kState) {
        throw NumericalDomain("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
    double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol::kState) {
        throw NumericalDomain("density matrix is not positive semidefinite (min eigenvalue " + std::to_string(min_eig) + ")");
    }
}

double DensityOperator::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return matrix_.squaredNorm();
}

PureState pure_state(Vector amplitudes, Dims dims) {
    return PureState(std::move(amplitudes), std::move(dims));
}

PureState bell_phi_plus() {
    Vector amps = Vector::Zero(4);
    amps(0) = 1.0;
    amps(3) = 1.0;
    return PureState(std::move(amps), {2, 2});
}

DensityOperator density_from_pure(const PureState &psi) {
    const Vector &v = psi.amplitudes();
    return DensityOperator(v * v.adjoint(), psi.dims());
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    const Matrix &ma = a.matrix();
    const Matrix &mb = b.matrix();
    const Eigen::Index nb = mb.rows();
    if (static_cast<std::size_t>(ma.rows() * nb) > kMaxHilbertDim) {
        throw DimensionMismatch("tensor product exceeds the maximum Hilbert dimension");
    }
    Matrix out(ma.rows() * nb, ma.cols() * nb);
    for (Eigen::Index r = 0; r < ma.rows(); ++r) {
        for (Eigen::Index c = 0; c < ma.cols(); ++c) {
            out.block(r * nb, c * nb, nb, nb) = ma(r, c) * mb;
        }
    }
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityOperator(std::move(out), std::move(dims));
}

DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> keep) {
    const Dims &dims = rho.dims();
    const std::size_t n = dims.size();
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) {
            throw DimensionMismatch("partial_trace: subsystem index " + std::to_string(k) + " out of range");
        }
        if (kept[k]) {
            throw DimensionMismatch("partial_trace: subsystem index " + std::to_string(k) + " repeated");
        }
        kept[k] = true;
    }

    Dims out_dims;
    for (std::size_t k = 0; k < n; ++k) {
        if (kept[k]) {
            out_dims.push_back(dims[k]);
        }
    }
    if (out_dims.empty()) {
        // Tracing everything leaves the scalar trace, which is 1.
        out_dims.push_back(1);
    }

    // Split a full basis index into (kept index, traced index).
    const std::size_t total = rho.dim();
    std::vector<std::size_t> kept_index(total);
    std::vector<std::size_t> traced_index(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rest = i;
        std::size_t k_idx = 0, k_stride = 1;
        std::size_t t_idx = 0, t_stride = 1;
        for (std::size_t s = n; s-- > 0;) {
            std::size_t digit = rest % dims[s];
            rest /= dims[s];
            if (kept[s]) {
                k_idx += digit * k_stride;
                k_stride *= dims[s];
            } else {
                t_idx += digit * t_stride;
                t_stride *= dims[s];
            }
        }
        kept_index[i] = k_idx;
        traced_index[i] = t_idx;
    }

    const std::size_t out_dim = dims_product(out_dims);
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim));
    const Matrix &m = rho.matrix();
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (traced_index[i] == traced_index[j]) {
                out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return DensityOperator(std::move(out), std::move(out_dims));
}

Spectrum eigendecompose_hermitian(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw NumericalDomain("eigendecompose_hermitian: matrix is not square");
    }
    if (!m.allFinite()) {
        throw NumericalDomain("eigendecompose_hermitian: matrix has non-finite entries");
    }
    double herm = hermiticity_error(m);
    if (herm > tol::kRoundTrip) {
        throw NumericalDomain("eigendecompose_hermitian: matrix is not Hermitian (max |M - M^dagger| = " +
                              std::to_string(herm) + ")");
    }
    Matrix sym = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalDomain("eigendecompose_hermitian: eigensolver did not converge");
    }
    // Eigen returns ascending order.
    const Eigen::Index n = sym.rows();
    Spectrum out{Eigen::VectorXd(n), Matrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
        out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    }
    return out;
}

Matrix sqrt_psd(const Matrix &m) {
    Spectrum spec = eigendecompose_hermitian(m);
    const Eigen::Index n = spec.eigenvalues.size();
    if (n == 0) {
        return Matrix(0, 0);
    }
    // Eigenvalues this close to zero carry no information, but their square
    // roots (~1e-8 for roundoff ~1e-17) would dominate downstream traces.
    const double radius = spec.eigenvalues.cwiseAbs().maxCoeff();
    const double roundoff = 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * radius;
    Eigen::VectorXd roots(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        double lambda = spec.eigenvalues(k);
        if (lambda < -tol::kEigenClamp) {
            throw NumericalDomain("sqrt_psd: eigenvalue " + std::to_string(lambda) + " is negative beyond roundoff");
        }
        roots(k) = lambda <= roundoff ? 0.0 : std::sqrt(lambda);
    }
    return spec.eigenvectors * roots.asDiagonal() * spec.eigenvectors.adjoint();
}

Matrix projector_above(const Spectrum &spectrum, double threshold) {
    const Eigen::Index n = spectrum.eigenvectors.rows();
    Matrix p = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < spectrum.eigenvalues.size(); ++k) {
        if (spectrum.eigenvalues(k) > threshold) {
            const auto v = spectrum.eigenvectors.col(k);
            p.noalias() += v * v.adjoint();
        }
    }
    return p;
}

}  // namespace qradar
