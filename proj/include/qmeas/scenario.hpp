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
 * Declarative scenario files: JSON schema, parsing with exhaustive
 * validation, and construction of the canonical measurement model a
 * scenario describes.
 *
 * Schema (all keys top-level):
 *   objectDim          positive integer (required)
 *   objectEigenvalues  array of distinct reals, length objectDim
 *                      (default 1..objectDim)
 *   initialAmplitudes  array of [re, im] pairs, length objectDim (required)
 *   readyState         {"pointerIndex": k} with 1-based k, or
 *                      {"amplitudes": [[re, im], ...]}
 *                      (default pointer index 1)
 *   timing             {"t": real, "deltaT": real > 0, "tau": real >= 0}
 *                      (defaults 0 / 1 / 0)
 *   checks             array of check names (default empty)
 *   monteCarlo         {"trials": positive integer, "seed": integer >= 0}
 *                      (defaults 1000 / 1)
 *
 * Amplitude lists must be normalized to within 1e-8 of unit norm; inputs
 * beyond that are rejected rather than rescaled. Inputs within tolerance but
 * off by more than 1e-13 are normalized exactly once, so reloading an echoed
 * scenario reproduces it bit for bit.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qmeas/model.hpp"
#include "qmeas/state.hpp"
#include "qmeas/types.hpp"

namespace qmeas::engine {

struct Timing {
  double t = 0.0;
  double deltaT = 1.0;
  double tau = 0.0;
};

struct MonteCarloParams {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
};

// 1-based pointer-basis index, or an explicit amplitude list.
using ReadyStateSpec = std::variant<Index, CVector>;

struct Scenario {
  Index objectDim = 0;
  std::vector<double> objectEigenvalues;
  CVector initialAmplitudes;
  ReadyStateSpec readyState = Index{1};
  Timing timing;
  std::vector<std::string> checks;
  MonteCarloParams monteCarlo;
};

namespace detail {

using nlohmann::json;

inline void require_keys(const json &j, const std::set<std::string> &allowed,
                         const std::string &context) {
  for (const auto &item : j.items())
    if (!allowed.count(item.key()))
      throw ParseError(context + ": unknown field '" + item.key() + "'");
}

inline double as_finite_number(const json &j, const std::string &field) {
  if (!j.is_number())
    throw ParseError(field + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(field + ": value must be finite");
  return v;
}

inline std::uint64_t as_nonnegative_integer(const json &j,
                                            const std::string &field) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ParseError(field + ": expected a nonnegative integer");
}

inline CVector parse_amplitudes(const json &j, const std::string &field) {
  if (!j.is_array() || j.empty())
    throw ParseError(field + ": expected a nonempty array of [re, im] pairs");
  CVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json &pair = j[i];
    std::ostringstream os;
    os << field << "[" << i << "]";
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(os.str() + ": expected a [re, im] pair");
    v(static_cast<Index>(i)) = Complex(as_finite_number(pair[0], os.str()),
                                       as_finite_number(pair[1], os.str()));
  }
  return v;
}

// Reject amplitude lists whose squared norm is off by more than 1e-8;
// normalize once when the deviation exceeds the reload window (1e-13), so
// that parsing an echoed scenario is the identity.
inline CVector checked_amplitudes(CVector v, const std::string &field) {
  const double n2 = v.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-8) {
    std::ostringstream os;
    os << field << ": amplitudes must be normalized (squared norm " << n2
       << "); renormalization is refused";
    throw ParseError(os.str());
  }
  if (std::abs(n2 - 1.0) > 1e-13) v /= std::sqrt(n2);
  return v;
}

}  // namespace detail

inline Scenario parse_scenario(const nlohmann::json &j) {
  using detail::as_finite_number;
  using detail::as_nonnegative_integer;
  using nlohmann::json;

  if (!j.is_object()) throw ParseError("scenario: expected a JSON object");
  detail::require_keys(j,
                       {"objectDim", "objectEigenvalues", "initialAmplitudes",
                        "readyState", "timing", "checks", "monteCarlo"},
                       "scenario");

  Scenario s;
  if (!j.contains("objectDim"))
    throw ParseError("scenario: missing required field 'objectDim'");
  const std::uint64_t dim = as_nonnegative_integer(j["objectDim"], "objectDim");
  if (dim == 0 || dim > 4096)
    throw ParseError("objectDim: must be a positive integer (at most 4096)");
  s.objectDim = static_cast<Index>(dim);

  if (j.contains("objectEigenvalues")) {
    const json &evs = j["objectEigenvalues"];
    if (!evs.is_array() || evs.size() != dim)
      throw ParseError("objectEigenvalues: expected an array of length objectDim");
    for (std::size_t i = 0; i < evs.size(); ++i)
      s.objectEigenvalues.push_back(
          as_finite_number(evs[i], "objectEigenvalues"));
    for (std::size_t i = 0; i < s.objectEigenvalues.size(); ++i)
      for (std::size_t k = i + 1; k < s.objectEigenvalues.size(); ++k)
        if (s.objectEigenvalues[i] == s.objectEigenvalues[k])
          throw ParseError("objectEigenvalues: values must be pairwise distinct");
  } else {
    for (Index i = 1; i <= s.objectDim; ++i)
      s.objectEigenvalues.push_back(static_cast<double>(i));
  }

  if (!j.contains("initialAmplitudes"))
    throw ParseError("scenario: missing required field 'initialAmplitudes'");
  s.initialAmplitudes =
      detail::parse_amplitudes(j["initialAmplitudes"], "initialAmplitudes");
  if (s.initialAmplitudes.size() != s.objectDim)
    throw ParseError("initialAmplitudes: expected objectDim amplitude pairs");
  s.initialAmplitudes =
      detail::checked_amplitudes(s.initialAmplitudes, "initialAmplitudes");

  if (j.contains("readyState")) {
    const json &rs = j["readyState"];
    if (!rs.is_object())
      throw ParseError("readyState: expected an object");
    detail::require_keys(rs, {"pointerIndex", "amplitudes"}, "readyState");
    if (rs.contains("pointerIndex") == rs.contains("amplitudes"))
      throw ParseError(
          "readyState: give exactly one of 'pointerIndex' or 'amplitudes'");
    if (rs.contains("pointerIndex")) {
      const std::uint64_t k =
          as_nonnegative_integer(rs["pointerIndex"], "readyState.pointerIndex");
      if (k < 1 || k > dim)
        throw ParseError(
            "readyState.pointerIndex: must lie between 1 and objectDim");
      s.readyState = static_cast<Index>(k);
    } else {
      CVector amps =
          detail::parse_amplitudes(rs["amplitudes"], "readyState.amplitudes");
      if (amps.size() != s.objectDim)
        throw ParseError(
            "readyState.amplitudes: expected objectDim amplitude pairs");
      s.readyState =
          detail::checked_amplitudes(std::move(amps), "readyState.amplitudes");
    }
  }

  if (j.contains("timing")) {
    const json &t = j["timing"];
    if (!t.is_object()) throw ParseError("timing: expected an object");
    detail::require_keys(t, {"t", "deltaT", "tau"}, "timing");
    if (t.contains("t")) s.timing.t = as_finite_number(t["t"], "timing.t");
    if (t.contains("deltaT"))
      s.timing.deltaT = as_finite_number(t["deltaT"], "timing.deltaT");
    if (t.contains("tau"))
      s.timing.tau = as_finite_number(t["tau"], "timing.tau");
  }
  if (s.timing.deltaT <= 0.0)
    throw ParseError("timing.deltaT: deltaT must be positive");
  if (s.timing.tau < 0.0)
    throw ParseError("timing.tau: tau must be nonnegative");

  if (j.contains("checks")) {
    const json &c = j["checks"];
    if (!c.is_array()) throw ParseError("checks: expected an array of names");
    for (const auto &name : c) {
      if (!name.is_string())
        throw ParseError("checks: entries must be strings");
      s.checks.push_back(name.get<std::string>());
    }
  }

  if (j.contains("monteCarlo")) {
    const json &mc = j["monteCarlo"];
    if (!mc.is_object()) throw ParseError("monteCarlo: expected an object");
    detail::require_keys(mc, {"trials", "seed"}, "monteCarlo");
    if (mc.contains("trials")) {
      s.monteCarlo.trials =
          as_nonnegative_integer(mc["trials"], "monteCarlo.trials");
      if (s.monteCarlo.trials == 0)
        throw ParseError("monteCarlo.trials: must be a positive integer");
    }
    if (mc.contains("seed"))
      s.monteCarlo.seed = as_nonnegative_integer(mc["seed"], "monteCarlo.seed");
  }
  return s;
}

inline Scenario parse_scenario(const std::string &text) {
  try {
    return parse_scenario(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

inline Scenario load_scenario(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

// Effective scenario back in schema form; parsing the result is the identity.
inline nlohmann::json scenario_to_json(const Scenario &s) {
  nlohmann::json j;
  j["objectDim"] = static_cast<std::uint64_t>(s.objectDim);
  j["objectEigenvalues"] = s.objectEigenvalues;
  auto amplitude_pairs = [](const CVector &v) {
    nlohmann::json out = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i)
      out.push_back({v(i).real(), v(i).imag()});
    return out;
  };
  j["initialAmplitudes"] = amplitude_pairs(s.initialAmplitudes);
  if (std::holds_alternative<Index>(s.readyState))
    j["readyState"] = {{"pointerIndex", static_cast<std::uint64_t>(
                                            std::get<Index>(s.readyState))}};
  else
    j["readyState"] = {
        {"amplitudes", amplitude_pairs(std::get<CVector>(s.readyState))}};
  j["timing"] = {{"t", s.timing.t},
                 {"deltaT", s.timing.deltaT},
                 {"tau", s.timing.tau}};
  j["checks"] = s.checks;
  j["monteCarlo"] = {{"trials", s.monteCarlo.trials},
                     {"seed", s.monteCarlo.seed}};
  return j;
}

// Apparatus ready state described by the scenario (apparatus dimension equals
// the object dimension in scenario models).
inline StateVector scenario_ready_state(const Scenario &s) {
  if (std::holds_alternative<Index>(s.readyState))
    return StateVector::basis_state(s.objectDim,
                                    std::get<Index>(s.readyState) - 1);
  return StateVector(std::get<CVector>(s.readyState));
}

inline StateVector scenario_object_state(const Scenario &s) {
  return StateVector(s.initialAmplitudes);
}

// Canonical model: observable diagonal in the computational basis with the
// scenario's spectrum, computational pointer basis.
inline MeasurementModel scenario_model(const Scenario &s) {
  return MeasurementModel::canonical(s.objectEigenvalues,
                                     scenario_ready_state(s));
}

}  // namespace qmeas::engine
