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
 * Stock demonstration scenarios, embedded so the CLI `demo` subcommand works
 * without installed data files. The same documents are shipped under
 * scenarios/ in the source tree; the timing values are illustrative.
 */

#pragma once

#include <string>
#include <vector>

#include "qmeas/types.hpp"

namespace qmeas::engine {

inline const std::vector<std::string> &stock_scenario_names() {
  static const std::vector<std::string> names = {
      "two-level", "atom-beam-timing", "chain-three-system", "bayes-contrast"};
  return names;
}

// JSON text of a stock scenario; throws on unknown names.
inline const std::string &stock_scenario(const std::string &name) {
  static const std::string twoLevel = R"({
  "objectDim": 2,
  "objectEigenvalues": [1.0, -1.0],
  "initialAmplitudes": [[0.7071067811865476, 0.0], [0.7071067811865476, 0.0]],
  "readyState": {"pointerIndex": 1},
  "timing": {"t": 0.0, "deltaT": 1e-06, "tau": 0.1},
  "checks": ["constraint", "linearity", "pointer-distribution", "joint-distribution", "conditional-state", "open-system", "entropy", "bayes-contrast", "repeatability-montecarlo"],
  "monteCarlo": {"trials": 10000, "seed": 42}
}
)";
  static const std::string atomBeamTiming = R"({
  "objectDim": 4,
  "objectEigenvalues": [1.0, 2.0, 3.0, 4.0],
  "initialAmplitudes": [[0.5, 0.0], [0.5, 0.0], [0.5, 0.0], [0.5, 0.0]],
  "readyState": {"pointerIndex": 1},
  "timing": {"t": 0.0, "deltaT": 1e-09, "tau": 0.001},
  "checks": ["constraint", "pointer-distribution", "joint-distribution", "repeatability-montecarlo"],
  "monteCarlo": {"trials": 10000, "seed": 7}
}
)";
  static const std::string chainThreeSystem = R"({
  "objectDim": 2,
  "objectEigenvalues": [1.0, 2.0],
  "initialAmplitudes": [[0.6, 0.0], [0.8, 0.0]],
  "readyState": {"amplitudes": [[0.5, 0.0], [0.8660254037844386, 0.0]]},
  "timing": {"t": 0.0, "deltaT": 1e-06, "tau": 2e-06},
  "checks": ["constraint", "linearity", "chain", "joint-distribution"],
  "monteCarlo": {"trials": 1000, "seed": 11}
}
)";
  static const std::string bayesContrast = R"({
  "objectDim": 2,
  "objectEigenvalues": [1.0, 2.0],
  "initialAmplitudes": [[0.7071067811865476, 0.0], [0.7071067811865476, 0.0]],
  "readyState": {"pointerIndex": 1},
  "timing": {"t": 0.0, "deltaT": 1.0, "tau": 0.0},
  "checks": ["bayes-contrast", "entropy", "pointer-distribution", "open-system"],
  "monteCarlo": {"trials": 1000, "seed": 3}
}
)";
  if (name == "two-level") return twoLevel;
  if (name == "atom-beam-timing") return atomBeamTiming;
  if (name == "chain-three-system") return chainThreeSystem;
  if (name == "bayes-contrast") return bayesContrast;
  std::string known;
  for (const auto &n : stock_scenario_names())
    known += (known.empty() ? "" : ", ") + n;
  throw ParseError("unknown demo scenario '" + name + "' (available: " + known +
                   ")");
}

}  // namespace qmeas::engine
