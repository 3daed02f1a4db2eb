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
 * Named scenario checks over the measurement kernel, the timing comparison
 * of the two interpretations of when state reduction happens, and the
 * aggregate report.
 *
 * Timing model: the object interacts with the apparatus from t to t+deltaT
 * and is free afterwards, so a second measurement is available at
 * t1 = t+deltaT. Reading the pointer takes a further tau. The "new"
 * interpretation places state reduction at t+deltaT; the "orthodox" one at
 * t+deltaT+tau, i.e. after the outcome is read.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qmeas/bayes.hpp"
#include "qmeas/chain.hpp"
#include "qmeas/kernel.hpp"
#include "qmeas/model.hpp"
#include "qmeas/repeatability.hpp"
#include "qmeas/scenario.hpp"
#include "qmeas/spectral.hpp"
#include "qmeas/state.hpp"
#include "qmeas/types.hpp"

namespace qmeas::engine {

struct TimelineEvent {
  double time = 0.0;
  std::string event;
  std::string interpretation;  // "new" or "orthodox"
};

struct TimingSection {
  std::vector<TimelineEvent> events;
  double ratio = 0.0;          // tau / deltaT
  double threshold = 10.0;     // ratio at which deltaT << tau is declared
  bool orthodoxPostdatesSecondMeasurement = false;  // tau > 0
  bool scatteringRegime = false;                    // ratio >= threshold
};

struct CheckResult {
  std::string name;
  bool passed = false;
  // Named scalar payloads, in emission order.
  std::vector<std::pair<std::string, double>> metrics;
  // Optional plot-ready table.
  std::vector<std::string> tableHeader;
  std::vector<std::vector<double>> tableRows;
};

struct Report {
  Scenario scenario;
  TimingSection timing;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.passed; });
  }
};

// Event timeline of one measurement under both interpretations. Shared
// physical events appear once per interpretation; the interpretations differ
// exactly in where "state-reduction" sits.
inline TimingSection run_timing_comparison(const Scenario &scenario,
                                           double threshold = 10.0) {
  const Timing &timing = scenario.timing;
  const double interactionEnd = timing.t + timing.deltaT;
  const double readingDone = interactionEnd + timing.tau;

  TimingSection section;
  section.threshold = threshold;
  section.ratio = timing.tau / timing.deltaT;
  section.orthodoxPostdatesSecondMeasurement = timing.tau > 0.0;
  section.scatteringRegime = section.ratio >= threshold;

  auto add = [&section](double time, const char *event,
                        const char *interpretation) {
    section.events.push_back({time, event, interpretation});
  };
  for (const char *view : {"new", "orthodox"}) {
    add(timing.t, "interaction-start", view);
    add(interactionEnd, "interaction-end", view);
    if (view[0] == 'n') add(interactionEnd, "state-reduction", view);
    add(interactionEnd, "second-measurement-availability", view);
    add(readingDone, "pointer-reading-completion", view);
    if (view[0] == 'o') add(readingDone, "state-reduction", view);
  }
  std::stable_sort(section.events.begin(), section.events.end(),
                   [](const TimelineEvent &a, const TimelineEvent &b) {
                     if (a.time != b.time) return a.time < b.time;
                     return a.interpretation < b.interpretation;
                   });
  return section;
}

namespace detail {

inline std::vector<Complex> object_coefficients(const MeasurementModel &model,
                                                const StateVector &psi) {
  std::vector<Complex> c;
  c.reserve(model.outcome_count());
  for (std::size_t n = 0; n < model.outcome_count(); ++n)
    c.push_back(model.object_eigenvector(n).dot(psi.amplitudes()));
  return c;
}

inline CheckResult check_constraint(const MeasurementModel &model) {
  CheckResult r;
  r.name = "constraint";
  const double constraint = model.constraint_residual();
  const double unitarity =
      max_abs(model.unitary().adjoint() * model.unitary() -
              CMatrix::Identity(model.composite_dim(), model.composite_dim()));
  const double commutator = model.object_commutator_residual();
  r.metrics = {{"constraint_residual", constraint},
               {"unitarity_residual", unitarity},
               {"commutator_residual", commutator}};
  r.passed = constraint <= tol::kValidity && unitarity <= tol::kValidity;
  return r;
}

inline CheckResult check_linearity(const MeasurementModel &model,
                                   const StateVector &psi) {
  CheckResult r;
  r.name = "linearity";
  const double residual = verify_linearity(model, psi);
  r.metrics = {{"residual", residual}};
  r.passed = residual <= tol::kValidity;
  return r;
}

inline CheckResult check_pointer_distribution(const MeasurementModel &model,
                                              const StateVector &psi) {
  CheckResult r;
  r.name = "pointer-distribution";
  const OutcomeDistribution pointer = pointer_distribution(model, psi);
  const OutcomeDistribution object = statistical_formula(
      model.object_observable(), DensityOperator::pure(psi));
  const auto c = object_coefficients(model, psi);
  double vsAmplitudes = 0.0, vsFormula = 0.0;
  for (std::size_t n = 0; n < pointer.size(); ++n) {
    vsAmplitudes = std::max(
        vsAmplitudes, std::abs(pointer.probability(n) - std::norm(c[n])));
    vsFormula = std::max(
        vsFormula, std::abs(pointer.probability(n) - object.probability(n)));
    r.tableRows.push_back({pointer.eigenvalue(n), pointer.probability(n)});
  }
  r.tableHeader = {"outcome_eigenvalue", "probability"};
  r.metrics = {{"max_deviation_from_amplitudes", vsAmplitudes},
               {"max_deviation_from_statistical_formula", vsFormula}};
  r.passed = vsAmplitudes <= tol::kValidity && vsFormula <= tol::kValidity;
  return r;
}

inline CheckResult check_joint_distribution(const MeasurementModel &model,
                                            const StateVector &psi) {
  CheckResult r;
  r.name = "joint-distribution";
  const JointOutcomeDistribution joint =
      joint_simultaneous_distribution(model, psi);
  const auto c = object_coefficients(model, psi);
  double diagonalDeviation = 0.0;
  for (std::size_t n = 0; n < joint.row_eigenvalues().size(); ++n) {
    diagonalDeviation = std::max(
        diagonalDeviation, std::abs(joint.probability(n, n) - std::norm(c[n])));
    for (std::size_t m = 0; m < joint.col_eigenvalues().size(); ++m)
      r.tableRows.push_back({joint.row_eigenvalues()[n],
                             joint.col_eigenvalues()[m],
                             joint.probability(n, m)});
  }
  r.tableHeader = {"pointer_outcome", "second_outcome", "probability"};
  r.metrics = {{"off_diagonal_mass", joint.off_diagonal_mass()},
               {"max_diagonal_deviation", diagonalDeviation}};
  r.passed = joint.off_diagonal_mass() <= 1e-12 &&
             diagonalDeviation <= tol::kValidity;
  return r;
}

inline CheckResult check_conditional_state(const MeasurementModel &model,
                                           const StateVector &psi) {
  CheckResult r;
  r.name = "conditional-state";
  const DensityOperator rho = DensityOperator::pure(psi);
  const DensityOperator sigma = DensityOperator::pure(model.ready_state());
  const OutcomeDistribution pointer = pointer_distribution(model, psi);
  double eigenstateResidual = 0.0, luedersResidual = 0.0;
  for (std::size_t n = 0; n < model.outcome_count(); ++n) {
    if (pointer.probability(n) <= tol::kProbabilityFloor) continue;
    const DensityOperator conditional = conditional_state(model, rho, sigma, n);
    const CVector &phi = model.object_eigenvector(n);
    eigenstateResidual =
        std::max(eigenstateResidual,
                 frobenius_distance(conditional.matrix(), phi * phi.adjoint()));
    const DensityOperator lueders =
        luders_update(model.object_observable(), rho, n);
    luedersResidual =
        std::max(luedersResidual,
                 frobenius_distance(conditional.matrix(), lueders.matrix()));
  }
  r.metrics = {{"max_eigenstate_residual", eigenstateResidual},
               {"max_luders_residual", luedersResidual}};
  r.passed = eigenstateResidual <= tol::kValidity &&
             luedersResidual <= tol::kValidity;
  return r;
}

inline CheckResult check_chain(const Scenario &scenario,
                               const MeasurementModel &model,
                               const StateVector &psi) {
  CheckResult r;
  r.name = "chain";
  std::vector<StateVector> secondPointer;
  for (Index n = 0; n < model.object_dim(); ++n)
    secondPointer.push_back(
        StateVector::basis_state(model.object_dim(), n));
  const ChainedModel chained =
      chain_extend(model, secondPointer, scenario_ready_state(scenario));

  const CVector finalState = chained.final_state(psi);
  const auto c = object_coefficients(model, psi);
  CVector expected = CVector::Zero(chained.total_dim());
  for (std::size_t n = 0; n < model.outcome_count(); ++n)
    expected += c[n] * tensor(tensor(model.object_eigenvector(n),
                                     model.pointer_eigenvector(n).amplitudes()),
                              chained.second_pointer_eigenvector(n).amplitudes());
  const double finalResidual = (finalState - expected).norm();

  const TripleOutcomeDistribution triple = chained.joint_distribution(psi);
  const OutcomeDistribution single = pointer_distribution(model, psi);
  const auto marginal = triple.first_pointer_marginal();
  double marginalDeviation = 0.0;
  for (std::size_t n = 0; n < marginal.size(); ++n)
    marginalDeviation = std::max(
        marginalDeviation, std::abs(marginal[n] - single.probability(n)));

  r.metrics = {{"final_state_residual", finalResidual},
               {"off_diagonal_mass", triple.off_diagonal_mass()},
               {"marginal_deviation", marginalDeviation}};
  r.passed = finalResidual <= tol::kValidity &&
             triple.off_diagonal_mass() <= 1e-12 &&
             marginalDeviation <= tol::kValidity;
  return r;
}

inline CheckResult check_repeatability(const Scenario &scenario,
                                       const MeasurementModel &model,
                                       const StateVector &psi) {
  CheckResult r;
  r.name = "repeatability-montecarlo";
  const RepeatabilityReport rep = verify_repeatability(
      model, psi, scenario.monteCarlo.trials, scenario.monteCarlo.seed);
  r.metrics = {{"trials", static_cast<double>(rep.trials)},
               {"agreements", static_cast<double>(rep.agreements)},
               {"seed", static_cast<double>(scenario.monteCarlo.seed)}};
  const auto frequencies = rep.first_outcome_frequencies();
  const OutcomeDistribution pointer = pointer_distribution(model, psi);
  r.tableHeader = {"outcome_eigenvalue", "frequency", "probability"};
  for (std::size_t n = 0; n < frequencies.size(); ++n)
    r.tableRows.push_back(
        {pointer.eigenvalue(n), frequencies[n], pointer.probability(n)});
  r.passed = rep.perfect();
  return r;
}

inline CheckResult check_entropy(const MeasurementModel &model,
                                 const StateVector &psi) {
  CheckResult r;
  r.name = "entropy";
  const DensityOperator rho = DensityOperator::pure(psi);
  const double before = von_neumann_entropy(rho);
  const double after = von_neumann_entropy(
      nonselective_channel(model.object_observable(), rho));
  r.metrics = {{"entropy_before", before},
               {"entropy_after", after},
               {"entropy_increase", after - before}};
  r.passed = after >= before - 1e-8;
  return r;
}

inline CheckResult check_bayes_contrast(const MeasurementModel &model,
                                        const StateVector &psi) {
  CheckResult r;
  r.name = "bayes-contrast";
  // Classical side: the perfectly correlated joint of the two successive
  // outcomes. A nonselective classical measurement leaves the prior intact.
  const JointOutcomeDistribution joint =
      joint_simultaneous_distribution(model, psi);
  auto label = [](double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return std::string(buffer);
  };
  std::vector<std::string> xLabels, yLabels;
  for (double v : joint.col_eigenvalues()) xLabels.push_back(label(v));
  for (double v : joint.row_eigenvalues()) yLabels.push_back(label(v));
  const bayes::ClassicalJoint classical(xLabels, yLabels,
                                        joint.table().transpose());
  const auto priorDist = bayes::prior(classical);
  const auto mixed = bayes::classical_nonselective(classical);
  double classicalResidual = 0.0;
  for (std::size_t x = 0; x < priorDist.size(); ++x)
    classicalResidual =
        std::max(classicalResidual,
                 std::abs(mixed.probability(x) - priorDist.probability(x)));

  // Quantum side: the nonselective channel moves the state.
  const DensityOperator rho = DensityOperator::pure(psi);
  const DensityOperator after =
      nonselective_channel(model.object_observable(), rho);
  const double quantumChange =
      frobenius_distance(after.matrix(), rho.matrix());

  r.metrics = {{"classical_total_probability_residual", classicalResidual},
               {"quantum_state_change", quantumChange}};
  r.passed = classicalResidual <= 1e-14;
  return r;
}

inline CheckResult check_open_system(const MeasurementModel &model,
                                     const StateVector &psi) {
  CheckResult r;
  r.name = "open-system";
  const DensityOperator rho = DensityOperator::pure(psi);
  const DensityOperator reduced = open_system_nonselective(model, psi);
  const DensityOperator channel =
      nonselective_channel(model.object_observable(), rho);
  const auto c = object_coefficients(model, psi);
  CMatrix mixture = CMatrix::Zero(model.object_dim(), model.object_dim());
  for (std::size_t n = 0; n < c.size(); ++n) {
    const CVector &phi = model.object_eigenvector(n);
    mixture += std::norm(c[n]) * (phi * phi.adjoint());
  }
  const double channelResidual =
      frobenius_distance(reduced.matrix(), channel.matrix());
  const double mixtureResidual = frobenius_distance(reduced.matrix(), mixture);
  r.metrics = {{"channel_residual", channelResidual},
               {"mixture_residual", mixtureResidual}};
  r.passed = channelResidual <= tol::kValidity &&
             mixtureResidual <= tol::kValidity;
  return r;
}

}  // namespace detail

// Execute one named check against the scenario's canonical model.
inline CheckResult run_check(const std::string &name, const Scenario &scenario,
                             const MeasurementModel &model,
                             const StateVector &psi) {
  if (name == "constraint") return detail::check_constraint(model);
  if (name == "linearity") return detail::check_linearity(model, psi);
  if (name == "pointer-distribution")
    return detail::check_pointer_distribution(model, psi);
  if (name == "joint-distribution")
    return detail::check_joint_distribution(model, psi);
  if (name == "conditional-state")
    return detail::check_conditional_state(model, psi);
  if (name == "chain") return detail::check_chain(scenario, model, psi);
  if (name == "repeatability-montecarlo")
    return detail::check_repeatability(scenario, model, psi);
  if (name == "entropy") return detail::check_entropy(model, psi);
  if (name == "bayes-contrast") return detail::check_bayes_contrast(model, psi);
  if (name == "open-system") return detail::check_open_system(model, psi);
  throw ParseError("unknown check name '" + name + "'");
}

// Run every check named by the scenario, in order, and assemble the report.
inline Report run_checks(const Scenario &scenario) {
  Report report;
  report.scenario = scenario;
  report.timing = run_timing_comparison(scenario);
  const MeasurementModel model = scenario_model(scenario);
  const StateVector psi = scenario_object_state(scenario);
  report.checks.reserve(scenario.checks.size());
  for (const std::string &name : scenario.checks)
    report.checks.push_back(run_check(name, scenario, model, psi));
  return report;
}

}  // namespace qmeas::engine
