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
 * Monte Carlo verification that measuring the same observable twice in
 * succession yields the same value each time.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmeas/kernel.hpp"
#include "qmeas/model.hpp"
#include "qmeas/rng.hpp"
#include "qmeas/state.hpp"

namespace qmeas {

struct RepeatabilityReport {
  std::uint64_t trials = 0;
  std::uint64_t agreements = 0;
  // How often each outcome came up in the first measurement.
  std::vector<std::uint64_t> firstOutcomeCounts;

  bool perfect() const { return agreements == trials; }

  std::vector<double> first_outcome_frequencies() const {
    std::vector<double> out(firstOutcomeCounts.size(), 0.0);
    if (trials == 0) return out;
    for (std::size_t n = 0; n < out.size(); ++n)
      out[n] = static_cast<double>(firstOutcomeCounts[n]) /
               static_cast<double>(trials);
    return out;
  }
};

// Per trial: draw the first outcome from the pointer distribution, reduce the
// object state conditional on it, then draw a second measurement of the same
// observable from the reduced state, and count agreements. Deterministic for
// a given seed; trials use independent derived streams.
inline RepeatabilityReport verify_repeatability(const MeasurementModel &model,
                                                const StateVector &psi,
                                                std::uint64_t trials,
                                                std::uint64_t seed) {
  if (trials == 0)
    throw DimensionError("verify_repeatability: trials must be positive");
  const OutcomeDistribution first = pointer_distribution(model, psi);
  const DensityOperator rho = DensityOperator::pure(psi);
  const DensityOperator sigma = DensityOperator::pure(model.ready_state());

  // The object state after outcome n, and the second-measurement statistics
  // on it, do not depend on the trial; compute them lazily per outcome.
  std::vector<std::optional<OutcomeDistribution>> secondByOutcome(
      model.outcome_count());

  RepeatabilityReport report;
  report.trials = trials;
  report.firstOutcomeCounts.assign(model.outcome_count(), 0);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    auto engine = trial_engine(seed, trial);
    const std::size_t n =
        sample_index(first.probabilities(), uniform_double(engine));
    ++report.firstOutcomeCounts[n];
    if (!secondByOutcome[n]) {
      const DensityOperator reduced = conditional_state(model, rho, sigma, n);
      secondByOutcome[n] =
          statistical_formula(model.object_observable(), reduced);
    }
    const std::size_t m = sample_index(secondByOutcome[n]->probabilities(),
                                       uniform_double(engine));
    if (m == n) ++report.agreements;
  }
  return report;
}

}  // namespace qmeas
