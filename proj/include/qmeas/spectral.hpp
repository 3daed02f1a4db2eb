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
 * Discrete observables as eigenvalue lists plus orthogonal projector
 * decompositions, eigendecomposition of Hermitian operators with
 * degeneracy clustering, and the von Neumann entropy.
 */

#pragma once

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "qmeas/linalg.hpp"
#include "qmeas/state.hpp"
#include "qmeas/types.hpp"

namespace qmeas {

// Discrete observable X = sum_n a_n E_n with pairwise distinct eigenvalues
// and a complete family of mutually orthogonal projectors.
class SpectralObservable {
 public:
  SpectralObservable(std::vector<double> eigenvalues,
                     std::vector<CMatrix> projectors,
                     double tolerance = tol::kValidity)
      : eigenvalues_(std::move(eigenvalues)), projectors_(std::move(projectors)) {
    if (eigenvalues_.empty() || eigenvalues_.size() != projectors_.size())
      throw DimensionError(
          "SpectralObservable: need equally many eigenvalues and projectors");
    dim_ = projectors_.front().rows();
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
      if (!std::isfinite(eigenvalues_[i]))
        throw ValidationError("SpectralObservable: eigenvalues must be finite");
      for (std::size_t j = i + 1; j < eigenvalues_.size(); ++j)
        if (std::abs(eigenvalues_[i] - eigenvalues_[j]) <= tolerance) {
          std::ostringstream os;
          os << "SpectralObservable: eigenvalues " << eigenvalues_[i] << " and "
             << eigenvalues_[j] << " are not distinct";
          throw ValidationError(os.str());
        }
    }
    CMatrix sum = CMatrix::Zero(dim_, dim_);
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
      const CMatrix &p = projectors_[i];
      if (p.rows() != dim_ || p.cols() != dim_)
        throw DimensionError("SpectralObservable: projector dimension mismatch");
      if (!all_finite(p))
        throw ValidationError("SpectralObservable: projector entries must be finite");
      if (max_abs(p - p.adjoint()) > tolerance)
        throw ValidationError("SpectralObservable: projector is not Hermitian");
      if (max_abs(p * p - p) > tolerance)
        throw ValidationError("SpectralObservable: projector is not idempotent");
      for (std::size_t j = i + 1; j < projectors_.size(); ++j)
        if (max_abs(p * projectors_[j]) > tolerance)
          throw ValidationError(
              "SpectralObservable: projectors are not mutually orthogonal");
      sum += p;
    }
    if (max_abs(sum - CMatrix::Identity(dim_, dim_)) > tolerance)
      throw ValidationError(
          "SpectralObservable: projectors do not sum to the identity");
  }

  // Observable diagonal in the computational basis with the given spectrum.
  static SpectralObservable diagonal(const std::vector<double> &eigenvalues) {
    const Index d = static_cast<Index>(eigenvalues.size());
    std::vector<CMatrix> projectors;
    projectors.reserve(eigenvalues.size());
    for (Index n = 0; n < d; ++n) {
      CMatrix p = CMatrix::Zero(d, d);
      p(n, n) = 1.0;
      projectors.push_back(std::move(p));
    }
    return SpectralObservable(eigenvalues, std::move(projectors));
  }

  Index dim() const { return dim_; }
  std::size_t size() const { return eigenvalues_.size(); }
  double eigenvalue(std::size_t n) const { return eigenvalues_.at(n); }
  const std::vector<double> &eigenvalues() const { return eigenvalues_; }
  const CMatrix &projector(std::size_t n) const { return projectors_.at(n); }

  // sum_n a_n E_n
  CMatrix matrix() const {
    CMatrix m = CMatrix::Zero(dim_, dim_);
    for (std::size_t n = 0; n < eigenvalues_.size(); ++n)
      m += eigenvalues_[n] * projectors_[n];
    return m;
  }

  // All projectors have rank one (trace within tol of 1).
  bool nondegenerate(double tolerance = tol::kValidity) const {
    for (const auto &p : projectors_)
      if (std::abs(p.trace().real() - 1.0) > tolerance) return false;
    return true;
  }

  // Phase-canonicalized unit eigenvector of a rank-1 eigenspace.
  CVector eigenvector(std::size_t n) const {
    const CMatrix &p = projectors_.at(n);
    if (std::abs(p.trace().real() - 1.0) > tol::kValidity)
      throw ValidationError(
          "SpectralObservable::eigenvector: eigenspace is degenerate");
    return principal_column(p);
  }

 private:
  std::vector<double> eigenvalues_;
  std::vector<CMatrix> projectors_;
  Index dim_;
};

// Eigendecomposition of a Hermitian matrix into a SpectralObservable.
// Eigenvalues closer than `eigenvalue_tolerance` are clustered into one
// spectral point (floating-point eigensolvers split degenerate eigenvalues);
// each cluster's projector is rebuilt from its eigenvector group and the
// cluster eigenvalue is the group mean. Eigenvalues come out ascending.
inline SpectralObservable spectral_decompose(
    const CMatrix &hermitian, double eigenvalue_tolerance = tol::kEigenvalueCluster,
    double tolerance = tol::kValidity) {
  if (hermitian.rows() != hermitian.cols())
    throw DimensionError("spectral_decompose: matrix must be square");
  if (!is_hermitian(hermitian, tolerance))
    throw ValidationError("spectral_decompose: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  if (solver.info() != Eigen::Success)
    throw ValidationError("spectral_decompose: eigensolver failed");
  const auto &values = solver.eigenvalues();
  const auto &vectors = solver.eigenvectors();

  std::vector<double> eigenvalues;
  std::vector<CMatrix> projectors;
  const Index d = hermitian.rows();
  Index start = 0;
  while (start < d) {
    Index end = start + 1;
    while (end < d && values(end) - values(end - 1) <= eigenvalue_tolerance) ++end;
    CMatrix p = CMatrix::Zero(d, d);
    double mean = 0.0;
    for (Index k = start; k < end; ++k) {
      p += vectors.col(k) * vectors.col(k).adjoint();
      mean += values(k);
    }
    eigenvalues.push_back(mean / static_cast<double>(end - start));
    projectors.push_back(std::move(p));
    start = end;
  }
  return SpectralObservable(std::move(eigenvalues), std::move(projectors),
                            tolerance);
}

// -sum_i lambda_i ln(lambda_i) in nats, with 0 ln 0 = 0.
inline double von_neumann_entropy(const DensityOperator &rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix(),
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ValidationError("von_neumann_entropy: eigensolver failed");
  double s = 0.0;
  for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace qmeas
