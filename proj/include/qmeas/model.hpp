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
 * Measurement models: a measured observable A, an apparatus ready state xi,
 * a pointer basis {xi_n}, and a measuring unitary U on the composite space
 * constrained by
 *
 *     U (phi_n (x) xi) = phi_n (x) xi_n        for every n,
 *
 * where phi_n are the (nondegenerate) eigenvectors of A. The constructed U
 * has the block form
 *
 *     U = sum_n |phi_n><phi_n| (x) V_n,
 *
 * with apparatus unitaries V_n mapping xi to xi_n. The block form commutes
 * with A (x) 1, so repeated measurements of A agree by construction.
 *
 * Choice of V_n: when xi coincides with a pointer vector xi_r, V_n is the
 * cyclic shift xi_k -> xi_{(k - r + n) mod d} on span{xi_k}, completed by the
 * identity on the orthocomplement. Otherwise V_n pairs the Gram-Schmidt
 * completion of {xi} with the completion of {xi_n}.
 */

#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "qmeas/linalg.hpp"
#include "qmeas/spectral.hpp"
#include "qmeas/state.hpp"
#include "qmeas/types.hpp"

namespace qmeas {

namespace detail {

// Index of the pointer vector equal to the ready state (up to 1e-12), if any.
inline std::optional<std::size_t> matching_pointer_index(
    const CVector &ready, const std::vector<CVector> &pointer) {
  for (std::size_t r = 0; r < pointer.size(); ++r)
    if ((ready - pointer[r]).norm() <= 1e-12) return r;
  return std::nullopt;
}

// Canonical apparatus unitaries V_n with V_n xi = xi_n, one per outcome.
inline std::vector<CMatrix> apparatus_unitaries(
    const CVector &ready, const std::vector<CVector> &pointer) {
  const Index m = ready.size();
  const std::size_t d = pointer.size();
  std::vector<CMatrix> out;
  out.reserve(d);

  const auto match = matching_pointer_index(ready, pointer);
  if (match) {
    // Cyclic shift on span{xi_k}, identity on the orthocomplement.
    CMatrix complement = CMatrix::Identity(m, m);
    for (const auto &v : pointer) complement -= v * v.adjoint();
    for (std::size_t n = 0; n < d; ++n) {
      CMatrix v = complement;
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t target = (k + d - *match + n) % d;
        v += pointer[target] * pointer[k].adjoint();
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  // Generic ready state: pair the completion of {xi} with the completion of
  // {xi_n}.
  const auto src = complete_orthonormal_basis({ready}, m);
  for (std::size_t n = 0; n < d; ++n) {
    const auto dst = complete_orthonormal_basis({pointer[n]}, m);
    CMatrix v = CMatrix::Zero(m, m);
    for (Index j = 0; j < m; ++j) v += dst[j] * src[j].adjoint();
    out.push_back(std::move(v));
  }
  return out;
}

// sum_n P_n (x) V_n
inline CMatrix block_unitary(const std::vector<CMatrix> &projectors,
                             const std::vector<CMatrix> &blocks) {
  CMatrix u = CMatrix::Zero(projectors.front().rows() * blocks.front().rows(),
                            projectors.front().cols() * blocks.front().cols());
  for (std::size_t n = 0; n < projectors.size(); ++n)
    u += tensor(projectors[n], blocks[n]);
  return u;
}

inline void check_pointer_family(const std::vector<StateVector> &pointer,
                                 Index objectDim, double tolerance) {
  if (pointer.empty() ||
      static_cast<Index>(pointer.size()) != objectDim)
    throw DimensionError(
        "measuring unitary: need exactly one pointer eigenvector per outcome");
  const Index m = pointer.front().dim();
  if (m < objectDim)
    throw DimensionError(
        "measuring unitary: apparatus dimension must be at least the object "
        "dimension");
  for (std::size_t i = 0; i < pointer.size(); ++i) {
    if (pointer[i].dim() != m)
      throw DimensionError("measuring unitary: pointer eigenvector dimension "
                           "mismatch");
    for (std::size_t j = 0; j < pointer.size(); ++j) {
      const Complex g = pointer[i].amplitudes().dot(pointer[j].amplitudes());
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > tolerance)
        throw ValidationError(
            "measuring unitary: pointer eigenvectors are not orthonormal");
    }
  }
}

}  // namespace detail

// Construct the canonical measuring unitary for a nondegenerate object
// observable, an apparatus ready state and an orthonormal pointer basis.
inline CMatrix build_measuring_unitary(
    const SpectralObservable &objectObservable, const StateVector &readyState,
    const std::vector<StateVector> &pointerEigenvectors,
    double tolerance = tol::kValidity) {
  if (!objectObservable.nondegenerate(tolerance))
    throw ValidationError(
        "build_measuring_unitary: object observable must be nondegenerate");
  detail::check_pointer_family(pointerEigenvectors, objectObservable.dim(),
                               tolerance);
  if (readyState.dim() != pointerEigenvectors.front().dim())
    throw DimensionError(
        "build_measuring_unitary: ready state lives in the apparatus space");

  std::vector<CVector> pointer;
  pointer.reserve(pointerEigenvectors.size());
  for (const auto &v : pointerEigenvectors) pointer.push_back(v.amplitudes());
  const auto blocks =
      detail::apparatus_unitaries(readyState.amplitudes(), pointer);

  std::vector<CMatrix> objectProjectors;
  objectProjectors.reserve(objectObservable.size());
  for (std::size_t n = 0; n < objectObservable.size(); ++n)
    objectProjectors.push_back(objectObservable.projector(n));
  return detail::block_unitary(objectProjectors, blocks);
}

// Immutable measurement model. Construction validates unitarity of U and the
// defining constraint U(phi_n (x) xi) = phi_n (x) xi_n for every n.
class MeasurementModel {
 public:
  static MeasurementModel create(SpectralObservable objectObservable,
                                 StateVector readyState,
                                 std::vector<StateVector> pointerEigenvectors,
                                 double tolerance = tol::kValidity) {
    CMatrix u = build_measuring_unitary(objectObservable, readyState,
                                        pointerEigenvectors, tolerance);
    return MeasurementModel(std::move(objectObservable), std::move(readyState),
                            std::move(pointerEigenvectors), std::move(u),
                            tolerance);
  }

  // Pointer eigenvectors defaulted from a pointer observable's computed
  // eigenbasis. B must be nondegenerate with the same eigenvalues as the
  // object observable (the one-to-one correspondence is by eigenvalue);
  // xi_n is the phase-canonicalized eigenvector of B at the object's n-th
  // eigenvalue.
  static MeasurementModel create(SpectralObservable objectObservable,
                                 StateVector readyState,
                                 const SpectralObservable &pointerObservable,
                                 double tolerance = tol::kValidity) {
    if (!pointerObservable.nondegenerate(tolerance))
      throw ValidationError(
          "MeasurementModel: pointer observable must be nondegenerate");
    if (pointerObservable.size() != objectObservable.size())
      throw DimensionError(
          "MeasurementModel: pointer observable must have one eigenvalue per "
          "object outcome");
    std::vector<StateVector> pointer;
    pointer.reserve(objectObservable.size());
    for (std::size_t n = 0; n < objectObservable.size(); ++n) {
      bool found = false;
      for (std::size_t j = 0; j < pointerObservable.size(); ++j)
        if (std::abs(pointerObservable.eigenvalue(j) -
                     objectObservable.eigenvalue(n)) <= tolerance) {
          pointer.push_back(StateVector(pointerObservable.eigenvector(j)));
          found = true;
          break;
        }
      if (!found) {
        std::ostringstream os;
        os << "MeasurementModel: pointer observable has no eigenvalue "
              "matching "
           << objectObservable.eigenvalue(n);
        throw ValidationError(os.str());
      }
    }
    return create(std::move(objectObservable), std::move(readyState),
                  std::move(pointer), tolerance);
  }

  // Canonical model: observable diagonal in the computational basis with the
  // given spectrum, apparatus of the same dimension with the computational
  // pointer basis.
  static MeasurementModel canonical(const std::vector<double> &eigenvalues,
                                    const StateVector &readyState) {
    const Index d = static_cast<Index>(eigenvalues.size());
    std::vector<StateVector> pointer;
    pointer.reserve(eigenvalues.size());
    for (Index n = 0; n < d; ++n)
      pointer.push_back(StateVector::basis_state(readyState.dim(), n));
    return create(SpectralObservable::diagonal(eigenvalues), readyState,
                  std::move(pointer));
  }

  const SpectralObservable &object_observable() const { return object_; }
  Index object_dim() const { return object_.dim(); }
  Index apparatus_dim() const { return ready_.dim(); }
  Index composite_dim() const { return object_dim() * apparatus_dim(); }
  std::size_t outcome_count() const { return object_.size(); }
  const StateVector &ready_state() const { return ready_; }
  const CMatrix &unitary() const { return unitary_; }

  double object_eigenvalue(std::size_t n) const { return object_.eigenvalue(n); }
  double pointer_eigenvalue(std::size_t n) const {
    // Pointer eigenvalues coincide with the object eigenvalues; the
    // one-to-one correspondence is by index.
    return object_.eigenvalue(n);
  }
  const CVector &object_eigenvector(std::size_t n) const {
    return objectEigenvectors_.at(n);
  }
  const StateVector &pointer_eigenvector(std::size_t n) const {
    return pointer_.at(n);
  }

  // |xi_n><xi_n| on the apparatus space.
  CMatrix pointer_projector(std::size_t n) const {
    return pointer_.at(n).projector();
  }

  // Pointer observable B = sum_n a_n |xi_n><xi_n|. Well-defined as a complete
  // spectral family only when the pointer basis spans the whole apparatus
  // space (apparatus_dim == object_dim).
  SpectralObservable pointer_observable() const {
    if (apparatus_dim() != object_dim())
      throw ValidationError(
          "pointer_observable: pointer basis does not span the apparatus "
          "space; use pointer_projector instead");
    std::vector<CMatrix> projectors;
    projectors.reserve(pointer_.size());
    for (const auto &v : pointer_) projectors.push_back(v.projector());
    return SpectralObservable(object_.eigenvalues(), std::move(projectors));
  }

  // max_n || U (phi_n (x) xi) - phi_n (x) xi_n ||
  double constraint_residual() const {
    double worst = 0.0;
    for (std::size_t n = 0; n < outcome_count(); ++n) {
      const CVector lhs =
          unitary_ * tensor(objectEigenvectors_[n], ready_.amplitudes());
      const CVector rhs =
          tensor(objectEigenvectors_[n], pointer_[n].amplitudes());
      worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
  }

  // Max entry of [U, A (x) 1]; zero for the block construction.
  double object_commutator_residual() const {
    const CMatrix a = tensor(
        object_.matrix(), CMatrix::Identity(apparatus_dim(), apparatus_dim()));
    return max_abs(unitary_ * a - a * unitary_);
  }

 private:
  MeasurementModel(SpectralObservable object, StateVector ready,
                   std::vector<StateVector> pointer, CMatrix unitary,
                   double tolerance)
      : object_(std::move(object)),
        ready_(std::move(ready)),
        pointer_(std::move(pointer)),
        unitary_(std::move(unitary)) {
    objectEigenvectors_.reserve(object_.size());
    for (std::size_t n = 0; n < object_.size(); ++n)
      objectEigenvectors_.push_back(object_.eigenvector(n));
    if (!is_unitary(unitary_, tolerance))
      throw ValidationError("MeasurementModel: measuring unitary failed the "
                            "unitarity check");
    const double residual = constraint_residual();
    if (residual > tolerance) {
      std::ostringstream os;
      os << "MeasurementModel: measuring-unitary constraint violated "
            "(residual "
         << residual << ")";
      throw ValidationError(os.str());
    }
  }

  SpectralObservable object_;
  StateVector ready_;
  std::vector<StateVector> pointer_;
  CMatrix unitary_;
  std::vector<CVector> objectEigenvectors_;
};

}  // namespace qmeas
