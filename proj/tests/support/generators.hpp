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

// Seeded random test-data generators (states, unitaries, density operators,
// observables, measurement models).

#pragma once

#include <random>
#include <vector>

#include "qmeas/qmeas.hpp"

namespace testgen {

using qmeas::CMatrix;
using qmeas::Complex;
using qmeas::CVector;
using qmeas::Index;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline CMatrix random_complex_matrix(std::mt19937_64 &gen, Index rows,
                                     Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(gen), normal(gen));
  return m;
}

inline CVector random_unit_vector(std::mt19937_64 &gen, Index dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = Complex(normal(gen), normal(gen));
  return v / v.norm();
}

inline qmeas::StateVector random_state(std::mt19937_64 &gen, Index dim) {
  return qmeas::StateVector(random_unit_vector(gen, dim));
}

inline CMatrix random_hermitian(std::mt19937_64 &gen, Index dim) {
  const CMatrix g = random_complex_matrix(gen, dim, dim);
  return (g + g.adjoint()) / 2.0;
}

inline CMatrix random_unitary(std::mt19937_64 &gen, Index dim) {
  const CMatrix g = random_complex_matrix(gen, dim, dim);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

inline qmeas::DensityOperator random_density(std::mt19937_64 &gen, Index dim) {
  const CMatrix g = random_complex_matrix(gen, dim, dim);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return qmeas::DensityOperator(std::move(rho));
}

inline std::vector<qmeas::StateVector> random_orthonormal_set(
    std::mt19937_64 &gen, Index dim, Index count) {
  const CMatrix q = random_unitary(gen, dim);
  std::vector<qmeas::StateVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index j = 0; j < count; ++j)
    out.push_back(qmeas::StateVector(q.col(j)));
  return out;
}

// Distinct eigenvalues with unit-spaced anchors, random eigenbasis.
inline qmeas::SpectralObservable random_nondegenerate_observable(
    std::mt19937_64 &gen, Index dim) {
  std::uniform_real_distribution<double> jitter(0.0, 0.4);
  std::vector<double> eigenvalues;
  std::vector<CMatrix> projectors;
  const CMatrix q = random_unitary(gen, dim);
  for (Index n = 0; n < dim; ++n) {
    eigenvalues.push_back(static_cast<double>(n + 1) + jitter(gen));
    projectors.push_back(q.col(n) * q.col(n).adjoint());
  }
  return qmeas::SpectralObservable(std::move(eigenvalues), std::move(projectors));
}

// Random measurement model: random object eigenbasis, random orthonormal
// pointer family of size d in an apparatus of dimension m >= d, and either a
// generic random ready state or (readyFromPointer) one of the pointer
// vectors.
inline qmeas::MeasurementModel random_model(std::mt19937_64 &gen, Index d,
                                            Index m, bool readyFromPointer) {
  auto object = random_nondegenerate_observable(gen, d);
  auto pointer = random_orthonormal_set(gen, m, d);
  if (readyFromPointer) {
    std::uniform_int_distribution<Index> pick(0, d - 1);
    qmeas::StateVector ready = pointer[static_cast<std::size_t>(pick(gen))];
    return qmeas::MeasurementModel::create(std::move(object), std::move(ready),
                                           std::move(pointer));
  }
  return qmeas::MeasurementModel::create(std::move(object),
                                         random_state(gen, m),
                                         std::move(pointer));
}

inline qmeas::MeasurementModel random_model(std::mt19937_64 &gen, Index d) {
  return random_model(gen, d, d, false);
}

}  // namespace testgen
