// Copyright 2026 The qmeas developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Pure and mixed quantum states with their normalization invariants.
 */

#pragma once

#include <sstream>
#include <utility>

#include "qmeas/linalg.hpp"
#include "qmeas/types.hpp"

namespace qmeas {

// Normalized pure state. The squared norm must be within `tolerance` of 1;
// vectors are stored exactly as given (no silent renormalization).
class StateVector {
 public:
  explicit StateVector(CVector amplitudes, double tolerance = tol::kValidity)
      : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() <= 0)
      throw DimensionError("StateVector: dimension must be positive");
    if (!amplitudes_.allFinite())
      throw ValidationError("StateVector: amplitudes must be finite");
    const double n2 = amplitudes_.squaredNorm();
    if (std::abs(n2 - 1.0) > tolerance) {
      std::ostringstream os;
      os << "StateVector: squared norm " << n2 << " deviates from 1 by more than "
         << tolerance;
      throw ValidationError(os.str());
    }
  }

  // k-th computational basis vector of the given dimension (0-based).
  static StateVector basis_state(Index dim, Index k) {
    if (k < 0 || k >= dim)
      throw DimensionError("StateVector::basis_state: index out of range");
    CVector v = CVector::Zero(dim);
    v(k) = 1.0;
    return StateVector(std::move(v));
  }

  Index dim() const { return amplitudes_.size(); }
  const CVector &amplitudes() const { return amplitudes_; }
  Complex amplitude(Index k) const { return amplitudes_(k); }

  // |v><v|
  CMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  CVector amplitudes_;
};

// Density operator: Hermitian, unit trace, positive semidefinite (all within
// `tolerance`).
class DensityOperator {
 public:
  explicit DensityOperator(CMatrix matrix, double tolerance = tol::kValidity)
      : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() <= 0)
      throw DimensionError("DensityOperator: matrix must be square and nonempty");
    if (!all_finite(matrix_))
      throw ValidationError("DensityOperator: entries must be finite");
    if (!is_hermitian(matrix_, tolerance))
      throw ValidationError("DensityOperator: matrix is not Hermitian");
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tolerance) {
      std::ostringstream os;
      os << "DensityOperator: trace " << tr << " deviates from 1 by more than "
         << tolerance;
      throw ValidationError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_,
                                                  Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw ValidationError("DensityOperator: eigenvalue computation failed");
    if (solver.eigenvalues().minCoeff() < -tolerance) {
      std::ostringstream os;
      os << "DensityOperator: negative eigenvalue "
         << solver.eigenvalues().minCoeff();
      throw ValidationError(os.str());
    }
  }

  static DensityOperator pure(const StateVector &psi) {
    return DensityOperator(psi.projector());
  }

  static DensityOperator maximally_mixed(Index dim) {
    return DensityOperator(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
  }

  Index dim() const { return matrix_.rows(); }
  const CMatrix &matrix() const { return matrix_; }

 private:
  CMatrix matrix_;
};

}  // namespace qmeas
