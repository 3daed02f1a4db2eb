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
 * Deterministic, bit-reproducible randomness for Monte Carlo runs.
 *
 * A 64-bit master seed expands into one independent stream per trial through
 * the splitmix64 mixing function; each trial seeds its own std::mt19937_64
 * engine (the C++ standard pins its output sequence, so results are
 * reproducible across platforms). Uniform doubles take the top 53 bits of
 * the raw engine output; outcomes are drawn by inverse CDF over the outcome
 * list in index order. No implementation-defined <random> distributions are
 * involved.
 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qmeas/types.hpp"

namespace qmeas {

// index-th value of the splitmix64 sequence started at `seed`.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 trial_engine(std::uint64_t masterSeed,
                                    std::uint64_t trialIndex) {
  return std::mt19937_64(splitmix64_at(masterSeed, trialIndex));
}

// Uniform double in [0, 1) from the top 53 bits of the engine output.
inline double uniform_double(std::mt19937_64 &engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Inverse-CDF draw over probabilities in index order. Falls back to the last
// positive-probability index when roundoff pushes u past the cumulative sum.
inline std::size_t sample_index(const std::vector<double> &probabilities,
                                double u) {
  if (probabilities.empty())
    throw DimensionError("sample_index: empty probability list");
  double cumulative = 0.0;
  for (std::size_t n = 0; n < probabilities.size(); ++n) {
    cumulative += probabilities[n];
    if (u < cumulative) return n;
  }
  for (std::size_t n = probabilities.size(); n-- > 0;)
    if (probabilities[n] > 0.0) return n;
  throw ValidationError("sample_index: all probabilities are zero");
}

}  // namespace qmeas
