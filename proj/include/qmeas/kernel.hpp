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
 * Measurement statistics and state-change rules: the statistical formula,
 * the Lueders update and its nonselective form, the composite-system
 * conditional state, and the pointer statistics derived from the measuring
 * unitary alone.
 */

#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "qmeas/distributions.hpp"
#include "qmeas/linalg.hpp"
#include "qmeas/model.hpp"
#include "qmeas/spectral.hpp"
#include "qmeas/state.hpp"
#include "qmeas/types.hpp"

namespace qmeas {

namespace detail {

// Clamp roundoff-negative probabilities to zero; anything outside the slack
// window is a genuine violation.
inline double clamp_probability(double p, const char *what) {
  if (!std::isfinite(p) || p < -tol::kProbabilitySlack ||
      p > 1.0 + tol::kProbabilitySlack) {
    std::ostringstream os;
    os << what << ": probability " << p << " outside [0, 1]";
    throw ValidationError(os.str());
  }
  return std::min(std::max(p, 0.0), 1.0);
}

// View a composite-space vector as an objectDim x apparatusDim coefficient
// matrix (object index outermost).
inline Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                      Eigen::RowMajor>>
as_object_by_apparatus(const CVector &psi, Index objectDim, Index apparatusDim) {
  return {psi.data(), objectDim, apparatusDim};
}

}  // namespace detail

// Outcome probabilities p_n = Tr[E_n rho].
inline OutcomeDistribution statistical_formula(const SpectralObservable &observable,
                                               const DensityOperator &rho) {
  if (observable.dim() != rho.dim())
    throw DimensionError("statistical_formula: dimension mismatch");
  std::vector<double> probabilities;
  probabilities.reserve(observable.size());
  for (std::size_t n = 0; n < observable.size(); ++n) {
    const double p = (observable.projector(n) * rho.matrix()).trace().real();
    probabilities.push_back(detail::clamp_probability(p, "statistical_formula"));
  }
  return OutcomeDistribution(observable.eigenvalues(), std::move(probabilities));
}

// Selective state change E_n rho E_n / Tr[E_n rho] on outcome n.
inline DensityOperator luders_update(const SpectralObservable &observable,
                                     const DensityOperator &rho,
                                     std::size_t outcomeIndex,
                                     double probabilityFloor = tol::kProbabilityFloor) {
  if (observable.dim() != rho.dim())
    throw DimensionError("luders_update: dimension mismatch");
  if (outcomeIndex >= observable.size())
    throw DimensionError("luders_update: outcome index out of range");
  const CMatrix &e = observable.projector(outcomeIndex);
  const CMatrix numerator = e * rho.matrix() * e;
  const double p = numerator.trace().real();
  if (p <= probabilityFloor) {
    std::ostringstream os;
    os << "luders_update: conditioning on null event (outcome " << outcomeIndex
       << ", probability " << p << ")";
    throw NullEventError(os.str());
  }
  return DensityOperator(numerator / p);
}

// Nonselective state change rho -> sum_n E_n rho E_n.
inline DensityOperator nonselective_channel(const SpectralObservable &observable,
                                            const DensityOperator &rho) {
  if (observable.dim() != rho.dim())
    throw DimensionError("nonselective_channel: dimension mismatch");
  CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
  for (std::size_t n = 0; n < observable.size(); ++n)
    out += observable.projector(n) * rho.matrix() * observable.projector(n);
  return DensityOperator(std::move(out));
}

// Residual || U(psi (x) xi) - sum_n c_n phi_n (x) xi_n || with
// c_n = <phi_n|psi>. Both sides are computed independently; at most 1e-10
// for any valid model.
inline double verify_linearity(const MeasurementModel &model,
                               const StateVector &psi) {
  if (psi.dim() != model.object_dim())
    throw DimensionError("verify_linearity: state dimension mismatch");
  const CVector lhs =
      model.unitary() * tensor(psi.amplitudes(), model.ready_state().amplitudes());
  CVector rhs = CVector::Zero(model.composite_dim());
  for (std::size_t n = 0; n < model.outcome_count(); ++n) {
    const Complex c = model.object_eigenvector(n).dot(psi.amplitudes());
    rhs += c * tensor(model.object_eigenvector(n),
                      model.pointer_eigenvector(n).amplitudes());
  }
  return (lhs - rhs).norm();
}

// Reduced object state after the interaction, ignoring the outcome:
// Tr_A[ U |psi (x) xi><psi (x) xi| U^dagger ]. Coincides with the
// nonselective channel of the object observable.
inline DensityOperator open_system_nonselective(const MeasurementModel &model,
                                                const StateVector &psi) {
  if (psi.dim() != model.object_dim())
    throw DimensionError("open_system_nonselective: state dimension mismatch");
  const CVector evolved =
      model.unitary() * tensor(psi.amplitudes(), model.ready_state().amplitudes());
  const CMatrix composite = evolved * evolved.adjoint();
  return DensityOperator(partial_trace_apparatus(composite, model.object_dim(),
                                                 model.apparatus_dim()));
}

// Object state conditional on pointer outcome n:
//
//   Tr_A[(1 (x) E^B(a_n)) U (rho (x) sigma) U^dagger (1 (x) E^B(a_n))]
//   ---------------------------------------------------------------- .
//   Tr[(1 (x) E^B(a_n)) U (rho (x) sigma) U^dagger (1 (x) E^B(a_n))]
inline DensityOperator conditional_state(const MeasurementModel &model,
                                         const DensityOperator &rhoObject,
                                         const DensityOperator &sigmaApparatus,
                                         std::size_t outcomeIndex,
                                         double probabilityFloor = tol::kProbabilityFloor) {
  if (rhoObject.dim() != model.object_dim())
    throw DimensionError("conditional_state: object state dimension mismatch");
  if (sigmaApparatus.dim() != model.apparatus_dim())
    throw DimensionError("conditional_state: apparatus state dimension mismatch");
  if (outcomeIndex >= model.outcome_count())
    throw DimensionError("conditional_state: outcome index out of range");
  const CMatrix evolved =
      model.unitary() * tensor(rhoObject.matrix(), sigmaApparatus.matrix()) *
      model.unitary().adjoint();
  const CMatrix projector =
      tensor(CMatrix::Identity(model.object_dim(), model.object_dim()),
             model.pointer_projector(outcomeIndex));
  const CMatrix projected = projector * evolved * projector;
  const double p = projected.trace().real();
  if (p <= probabilityFloor) {
    std::ostringstream os;
    os << "conditional_state: conditioning on null event (outcome "
       << outcomeIndex << ", probability " << p << ")";
    throw NullEventError(os.str());
  }
  return DensityOperator(partial_trace_apparatus(projected, model.object_dim(),
                                                 model.apparatus_dim()) /
                         p);
}

// Pointer statistics read off the evolved composite state,
// p_n = <Psi| (1 (x) |xi_n><xi_n|) |Psi> with Psi = U(psi (x) xi). Equals
// |<phi_n|psi>|^2, i.e. the object's statistical formula, without invoking
// any state reduction of the composite system.
inline OutcomeDistribution pointer_distribution(const MeasurementModel &model,
                                                const StateVector &psi) {
  if (psi.dim() != model.object_dim())
    throw DimensionError("pointer_distribution: state dimension mismatch");
  const CVector evolved =
      model.unitary() * tensor(psi.amplitudes(), model.ready_state().amplitudes());
  const auto coefficients = detail::as_object_by_apparatus(
      evolved, model.object_dim(), model.apparatus_dim());
  std::vector<double> probabilities;
  std::vector<double> eigenvalues;
  probabilities.reserve(model.outcome_count());
  eigenvalues.reserve(model.outcome_count());
  for (std::size_t n = 0; n < model.outcome_count(); ++n) {
    const CVector overlap =
        coefficients * model.pointer_eigenvector(n).amplitudes().conjugate();
    probabilities.push_back(
        detail::clamp_probability(overlap.squaredNorm(), "pointer_distribution"));
    eigenvalues.push_back(model.pointer_eigenvalue(n));
  }
  return OutcomeDistribution(std::move(eigenvalues), std::move(probabilities));
}

// Joint statistics of the pointer reading and an immediate second measurement
// of the object observable, table[n][m] = |<phi_m (x) xi_n | Psi>|^2. The
// table is delta_{nm} |c_n|^2: repeated outcomes always agree.
inline JointOutcomeDistribution joint_simultaneous_distribution(
    const MeasurementModel &model, const StateVector &psi) {
  if (psi.dim() != model.object_dim())
    throw DimensionError(
        "joint_simultaneous_distribution: state dimension mismatch");
  const CVector evolved =
      model.unitary() * tensor(psi.amplitudes(), model.ready_state().amplitudes());
  const std::size_t d = model.outcome_count();
  RMatrix table(d, d);
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t m = 0; m < d; ++m) {
      const CVector basis = tensor(model.object_eigenvector(m),
                                   model.pointer_eigenvector(n).amplitudes());
      table(static_cast<Index>(n), static_cast<Index>(m)) =
          std::norm(basis.dot(evolved));
    }
  std::vector<double> pointerEigenvalues;
  pointerEigenvalues.reserve(d);
  for (std::size_t n = 0; n < d; ++n)
    pointerEigenvalues.push_back(model.pointer_eigenvalue(n));
  return JointOutcomeDistribution(pointerEigenvalues,
                                  model.object_observable().eigenvalues(),
                                  std::move(table));
}

}  // namespace qmeas
