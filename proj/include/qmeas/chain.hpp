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
 * Extension of a measurement model by a second apparatus that measures the
 * first pointer. The second measuring unitary U2 treats the first pointer as
 * the measured observable (its eigenspaces on the composite space are
 * degenerate, with projectors 1 (x) |xi_n><xi_n|), so
 *
 *   U2 ( (U (psi (x) xi)) (x) xi' ) = sum_n c_n phi_n (x) xi_n (x) xi'_n.
 */

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "qmeas/distributions.hpp"
#include "qmeas/linalg.hpp"
#include "qmeas/model.hpp"
#include "qmeas/state.hpp"
#include "qmeas/types.hpp"

namespace qmeas {

// Joint distribution over (second pointer, first pointer, object) outcomes.
// Entry (l, n, m) is the probability of second-pointer value a_l together
// with first-pointer value a_n and object value a_m.
class TripleOutcomeDistribution {
 public:
  TripleOutcomeDistribution(std::vector<double> eigenvalues,
                            std::vector<double> table)
      : eigenvalues_(std::move(eigenvalues)), table_(std::move(table)) {
    const std::size_t d = eigenvalues_.size();
    if (table_.size() != d * d * d)
      throw DimensionError("TripleOutcomeDistribution: table size mismatch");
    double sum = 0.0;
    for (double v : table_) {
      if (!std::isfinite(v) || v < -tol::kProbabilitySlack)
        throw ValidationError("TripleOutcomeDistribution: invalid entry");
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol::kValidity)
      throw ValidationError("TripleOutcomeDistribution: entries do not sum to 1");
  }

  std::size_t size() const { return eigenvalues_.size(); }
  const std::vector<double> &eigenvalues() const { return eigenvalues_; }
  double probability(std::size_t l, std::size_t n, std::size_t m) const {
    const std::size_t d = eigenvalues_.size();
    return table_.at((l * d + n) * d + m);
  }

  // Mass outside the perfectly correlated entries (n, n, n).
  double off_diagonal_mass() const {
    const std::size_t d = eigenvalues_.size();
    double mass = 0.0;
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t n = 0; n < d; ++n)
        for (std::size_t m = 0; m < d; ++m)
          if (!(l == n && n == m)) mass += std::abs(probability(l, n, m));
    return mass;
  }

  // Marginal over the first pointer outcome.
  std::vector<double> first_pointer_marginal() const {
    const std::size_t d = eigenvalues_.size();
    std::vector<double> out(d, 0.0);
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t n = 0; n < d; ++n)
        for (std::size_t m = 0; m < d; ++m) out[n] += probability(l, n, m);
    return out;
  }

 private:
  std::vector<double> eigenvalues_;
  std::vector<double> table_;
};

// A measurement model coupled to a second apparatus measuring the first
// pointer.
class ChainedModel {
 public:
  ChainedModel(MeasurementModel first, std::vector<StateVector> secondPointer,
               StateVector secondReady, CMatrix secondUnitary)
      : first_(std::move(first)),
        secondPointer_(std::move(secondPointer)),
        secondReady_(std::move(secondReady)),
        secondUnitary_(std::move(secondUnitary)) {}

  const MeasurementModel &first() const { return first_; }
  const StateVector &second_ready_state() const { return secondReady_; }
  const StateVector &second_pointer_eigenvector(std::size_t n) const {
    return secondPointer_.at(n);
  }
  const CMatrix &second_unitary() const { return secondUnitary_; }
  Index second_apparatus_dim() const { return secondReady_.dim(); }
  Index total_dim() const {
    return first_.composite_dim() * second_apparatus_dim();
  }

  // U2 ((U (psi (x) xi)) (x) xi') on object (x) apparatus1 (x) apparatus2.
  CVector final_state(const StateVector &psi) const {
    if (psi.dim() != first_.object_dim())
      throw DimensionError("ChainedModel::final_state: state dimension mismatch");
    const CVector afterFirst =
        first_.unitary() *
        tensor(psi.amplitudes(), first_.ready_state().amplitudes());
    return secondUnitary_ * tensor(afterFirst, secondReady_.amplitudes());
  }

  // max_n || U2 (phi_n (x) xi_n (x) xi') - phi_n (x) xi_n (x) xi'_n ||
  double constraint_residual() const {
    double worst = 0.0;
    for (std::size_t n = 0; n < first_.outcome_count(); ++n) {
      const CVector lhs =
          secondUnitary_ *
          tensor(tensor(first_.object_eigenvector(n),
                        first_.pointer_eigenvector(n).amplitudes()),
                 secondReady_.amplitudes());
      const CVector rhs = tensor(
          tensor(first_.object_eigenvector(n),
                 first_.pointer_eigenvector(n).amplitudes()),
          secondPointer_[n].amplitudes());
      worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
  }

  // Full three-way outcome table; supported only on (n, n, n).
  TripleOutcomeDistribution joint_distribution(const StateVector &psi) const {
    const CVector state = final_state(psi);
    const std::size_t d = first_.outcome_count();
    std::vector<double> table(d * d * d, 0.0);
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t n = 0; n < d; ++n)
        for (std::size_t m = 0; m < d; ++m) {
          const CVector basis =
              tensor(tensor(first_.object_eigenvector(m),
                            first_.pointer_eigenvector(n).amplitudes()),
                     secondPointer_[l].amplitudes());
          table[(l * d + n) * d + m] = std::norm(basis.dot(state));
        }
    std::vector<double> eigenvalues;
    eigenvalues.reserve(d);
    for (std::size_t n = 0; n < d; ++n)
      eigenvalues.push_back(first_.object_eigenvalue(n));
    return TripleOutcomeDistribution(std::move(eigenvalues), std::move(table));
  }

 private:
  MeasurementModel first_;
  std::vector<StateVector> secondPointer_;
  StateVector secondReady_;
  CMatrix secondUnitary_;
};

// Couple a second apparatus to the model, measuring the first pointer. The
// second measuring unitary is block-built over the (degenerate) eigenspaces
// 1 (x) |xi_n><xi_n| of the first pointer on the composite space.
inline ChainedModel chain_extend(const MeasurementModel &model,
                                 const std::vector<StateVector> &secondPointerEigenvectors,
                                 const StateVector &secondReadyState,
                                 double tolerance = tol::kValidity) {
  detail::check_pointer_family(secondPointerEigenvectors, model.object_dim(),
                               tolerance);
  if (secondReadyState.dim() != secondPointerEigenvectors.front().dim())
    throw DimensionError(
        "chain_extend: second ready state lives in the second apparatus space");

  std::vector<CVector> pointer;
  pointer.reserve(secondPointerEigenvectors.size());
  for (const auto &v : secondPointerEigenvectors)
    pointer.push_back(v.amplitudes());
  const auto blocks =
      detail::apparatus_unitaries(secondReadyState.amplitudes(), pointer);

  std::vector<CMatrix> firstPointerProjectors;
  firstPointerProjectors.reserve(model.outcome_count());
  const CMatrix objectIdentity =
      CMatrix::Identity(model.object_dim(), model.object_dim());
  for (std::size_t n = 0; n < model.outcome_count(); ++n)
    firstPointerProjectors.push_back(
        tensor(objectIdentity, model.pointer_projector(n)));
  CMatrix u2 = detail::block_unitary(firstPointerProjectors, blocks);

  // When the first apparatus is larger than the object space the first
  // pointer projectors do not span it; complete U2 by the identity there.
  if (model.apparatus_dim() > model.object_dim()) {
    CMatrix complement =
        CMatrix::Identity(model.composite_dim(), model.composite_dim());
    for (const auto &p : firstPointerProjectors) complement -= p;
    u2 += tensor(complement, CMatrix::Identity(secondReadyState.dim(),
                                               secondReadyState.dim()));
  }

  if (!is_unitary(u2, tolerance))
    throw ValidationError("chain_extend: second measuring unitary failed the "
                          "unitarity check");
  ChainedModel chained(model, secondPointerEigenvectors, secondReadyState,
                       std::move(u2));
  if (chained.constraint_residual() > tolerance)
    throw ValidationError(
        "chain_extend: second measuring-unitary constraint violated");
  return chained;
}

}  // namespace qmeas
