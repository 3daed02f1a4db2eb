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
 * Dense complex linear algebra on finite-dimensional Hilbert spaces:
 * tensor products, partial traces and numerical validity predicates.
 *
 * Tensor ordering convention (used everywhere in this library): the object
 * factor comes first and its index is outermost, i.e. the composite basis is
 * |i_object, k_apparatus> at flat index i*dimApparatus + k, and
 * (M (x) N)[i*n + k, j*n + l] = M[i,j] * N[k,l] for an n-dimensional second
 * factor.
 */

#pragma once

#include <cmath>
#include <sstream>
#include <type_traits>
#include <vector>

#include "qmeas/types.hpp"

namespace qmeas {

// Largest entry magnitude; zero for empty matrices.
inline double max_abs(const CMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const CMatrix &m) { return m.allFinite(); }

// Kronecker product with the object factor outermost. Two column vectors
// tensor to a column vector, anything else to a matrix.
template <typename DerivedA, typename DerivedB>
auto tensor(const Eigen::MatrixBase<DerivedA> &m1,
            const Eigen::MatrixBase<DerivedB> &m2) {
  constexpr bool bothVectors = DerivedA::ColsAtCompileTime == 1 &&
                               DerivedB::ColsAtCompileTime == 1;
  using Result = std::conditional_t<bothVectors, CVector, CMatrix>;
  const Index r1 = m1.rows(), c1 = m1.cols();
  const Index r2 = m2.rows(), c2 = m2.cols();
  Result out(r1 * r2, c1 * c2);
  for (Index i = 0; i < r1; ++i)
    for (Index j = 0; j < c1; ++j)
      out.block(i * r2, j * c2, r2, c2) = m1(i, j) * m2;
  return out;
}

// Trace out the apparatus factor of an operator on the composite space:
// out(i,j) = sum_k m(i*dimApparatus + k, j*dimApparatus + k).
// Preserves the trace exactly up to summation roundoff.
inline CMatrix partial_trace_apparatus(const CMatrix &m, Index dimObject,
                                       Index dimApparatus) {
  if (dimObject <= 0 || dimApparatus <= 0)
    throw DimensionError("partial_trace_apparatus: dimensions must be positive");
  if (m.rows() != m.cols() || m.rows() != dimObject * dimApparatus) {
    std::ostringstream os;
    os << "partial_trace_apparatus: matrix is " << m.rows() << "x" << m.cols()
       << ", expected square of dimension " << dimObject * dimApparatus;
    throw DimensionError(os.str());
  }
  CMatrix out = CMatrix::Zero(dimObject, dimObject);
  for (Index i = 0; i < dimObject; ++i)
    for (Index j = 0; j < dimObject; ++j)
      for (Index k = 0; k < dimApparatus; ++k)
        out(i, j) += m(i * dimApparatus + k, j * dimApparatus + k);
  return out;
}

// True iff the max-entry deviation of U^dagger U from the identity is <= tol.
inline bool is_unitary(const CMatrix &m, double tolerance = tol::kValidity) {
  if (m.rows() != m.cols()) return false;
  if (!all_finite(m)) return false;
  const CMatrix gram = m.adjoint() * m;
  return max_abs(gram - CMatrix::Identity(m.rows(), m.cols())) <= tolerance;
}

// True iff the max-entry deviation of m from m^dagger is <= tol.
inline bool is_hermitian(const CMatrix &m, double tolerance = tol::kValidity) {
  if (m.rows() != m.cols()) return false;
  if (!all_finite(m)) return false;
  return max_abs(m - m.adjoint()) <= tolerance;
}

inline double frobenius_distance(const CMatrix &a, const CMatrix &b) {
  return (a - b).norm();
}

// Global-phase convention: rotate so the first component with magnitude
// above the threshold is real and positive. Makes eigenvectors reproducible
// across runs.
inline CVector canonical_phase(CVector v, double threshold = 1e-8) {
  for (Index k = 0; k < v.size(); ++k) {
    const double a = std::abs(v(k));
    if (a > threshold) {
      v *= std::conj(v(k)) / a;
      break;
    }
  }
  return v;
}

// Unit vector spanning a rank-1 projector, phase-canonicalized. Picks the
// column of largest norm (lowest index on ties).
inline CVector principal_column(const CMatrix &projector) {
  if (projector.rows() != projector.cols())
    throw DimensionError("principal_column: projector must be square");
  Index best = 0;
  double bestNorm = 0.0;
  for (Index j = 0; j < projector.cols(); ++j) {
    const double n = projector.col(j).norm();
    if (n > bestNorm) {
      bestNorm = n;
      best = j;
    }
  }
  if (bestNorm <= 0.0)
    throw ValidationError("principal_column: projector is numerically zero");
  return canonical_phase(projector.col(best) / bestNorm);
}

// Extend the given orthonormal vectors to a full orthonormal basis by
// Gram-Schmidt over the standard basis, processed in index order with one
// re-orthogonalization pass. Deterministic.
inline std::vector<CVector> complete_orthonormal_basis(
    const std::vector<CVector> &seed, Index dim) {
  std::vector<CVector> basis = seed;
  for (const auto &v : basis)
    if (v.size() != dim)
      throw DimensionError("complete_orthonormal_basis: seed dimension mismatch");
  for (Index k = 0; k < dim && static_cast<Index>(basis.size()) < dim; ++k) {
    CVector cand = CVector::Zero(dim);
    cand(k) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto &b : basis) cand -= b * (b.dot(cand));
    const double n = cand.norm();
    if (n > 1e-8) basis.push_back(cand / n);
  }
  if (static_cast<Index>(basis.size()) != dim)
    throw ValidationError("complete_orthonormal_basis: completion failed");
  return basis;
}

}  // namespace qmeas
