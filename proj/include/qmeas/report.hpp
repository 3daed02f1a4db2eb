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
 * Deterministic report emission. Identical scenario and seed produce
 * byte-identical output in every format: numbers are printed with fixed
 * formats ('%.17g' in CSV tables), JSON keys are emitted in sorted order,
 * and no wall-clock data enters the report.
 */

#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "qmeas/checks.hpp"
#include "qmeas/scenario.hpp"
#include "qmeas/types.hpp"

namespace qmeas::engine {

enum class ReportFormat { Text, Csv, Json };

inline ReportFormat parse_format(const std::string &name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw ParseError("unsupported report format '" + name + "'");
}

namespace detail {

// 17 significant digits: enough to reproduce any double exactly.
inline std::string fmt17(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

// Shorter fixed format for the human-readable text report.
inline std::string fmt12(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

inline nlohmann::json report_to_json(const Report &report) {
  nlohmann::json j;
  j["scenario"] = scenario_to_json(report.scenario);

  nlohmann::json events = nlohmann::json::array();
  for (const auto &e : report.timing.events)
    events.push_back({{"time", e.time},
                      {"event", e.event},
                      {"interpretation", e.interpretation}});
  j["timing"] = {
      {"events", std::move(events)},
      {"ratio", report.timing.ratio},
      {"threshold", report.timing.threshold},
      {"orthodoxPostdatesSecondMeasurement",
       report.timing.orthodoxPostdatesSecondMeasurement},
      {"scatteringRegime", report.timing.scatteringRegime}};

  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : report.checks) {
    nlohmann::json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    nlohmann::json metrics;
    for (const auto &[key, value] : c.metrics) metrics[key] = value;
    entry["metrics"] = std::move(metrics);
    if (!c.tableHeader.empty()) {
      entry["table"] = {{"columns", c.tableHeader}, {"rows", c.tableRows}};
    }
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  j["allPassed"] = report.all_passed();
  return j;
}

inline std::string emit_text(const Report &report) {
  std::ostringstream out;
  const Scenario &s = report.scenario;
  out << "qmeas scenario report\n";
  out << "=====================\n";
  out << "object dimension: " << s.objectDim << "\n";
  out << "object eigenvalues:";
  for (double v : s.objectEigenvalues) out << " " << fmt12(v);
  out << "\n";
  out << "initial amplitudes:";
  for (Index i = 0; i < s.initialAmplitudes.size(); ++i)
    out << " (" << fmt12(s.initialAmplitudes(i).real()) << ", "
        << fmt12(s.initialAmplitudes(i).imag()) << ")";
  out << "\n";
  if (std::holds_alternative<Index>(s.readyState))
    out << "ready state: pointer index " << std::get<Index>(s.readyState)
        << "\n";
  else {
    out << "ready state: amplitudes";
    const CVector &v = std::get<CVector>(s.readyState);
    for (Index i = 0; i < v.size(); ++i)
      out << " (" << fmt12(v(i).real()) << ", " << fmt12(v(i).imag()) << ")";
    out << "\n";
  }
  out << "timing: t=" << fmt12(s.timing.t) << " deltaT=" << fmt12(s.timing.deltaT)
      << " tau=" << fmt12(s.timing.tau) << "\n";
  out << "monte carlo: trials=" << s.monteCarlo.trials
      << " seed=" << s.monteCarlo.seed << "\n";

  out << "\ntimeline:\n";
  for (const auto &e : report.timing.events)
    out << "  time=" << fmt12(e.time) << "  " << e.event << "  ["
        << e.interpretation << "]\n";
  out << "\ntiming analysis:\n";
  out << "  ratio tau/deltaT = " << fmt12(report.timing.ratio)
      << " (threshold " << fmt12(report.timing.threshold) << ")\n";
  out << "  orthodox reduction postdates second measurement: "
      << (report.timing.orthodoxPostdatesSecondMeasurement ? "yes" : "no")
      << "\n";
  out << "  scattering regime (deltaT << tau): "
      << (report.timing.scatteringRegime ? "yes" : "no") << "\n";

  if (!report.checks.empty()) {
    out << "\nchecks:\n";
    std::size_t passed = 0;
    for (const auto &c : report.checks) {
      out << "  " << (c.passed ? "PASS" : "FAIL") << " " << c.name << ":";
      for (const auto &[key, value] : c.metrics)
        out << " " << key << "=" << fmt12(value);
      out << "\n";
      if (c.passed) ++passed;
    }
    out << "\nsummary: " << passed << "/" << report.checks.size()
        << " checks passed\n";
  } else {
    out << "\nsummary: no checks requested\n";
  }
  return out.str();
}

inline std::string emit_csv(const Report &report) {
  std::ostringstream out;
  out << "# qmeas report\n";
  out << "# scenario " << scenario_to_json(report.scenario).dump() << "\n";
  out << "\n# timeline\n";
  out << "time,event,interpretation\n";
  for (const auto &e : report.timing.events)
    out << fmt17(e.time) << "," << e.event << "," << e.interpretation << "\n";
  out << "\n# timing\n";
  out << "ratio,threshold,orthodox_postdates_second_measurement,"
         "scattering_regime\n";
  out << fmt17(report.timing.ratio) << "," << fmt17(report.timing.threshold)
      << "," << (report.timing.orthodoxPostdatesSecondMeasurement ? 1 : 0)
      << "," << (report.timing.scatteringRegime ? 1 : 0) << "\n";
  for (const auto &c : report.checks) {
    out << "\n# check " << c.name << " " << (c.passed ? "pass" : "fail")
        << "\n";
    out << "metric,value\n";
    for (const auto &[key, value] : c.metrics)
      out << key << "," << fmt17(value) << "\n";
    if (!c.tableHeader.empty()) {
      out << "\n# check " << c.name << " table\n";
      for (std::size_t i = 0; i < c.tableHeader.size(); ++i)
        out << (i ? "," : "") << c.tableHeader[i];
      out << "\n";
      for (const auto &row : c.tableRows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out << (i ? "," : "") << fmt17(row[i]);
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace detail

inline nlohmann::json report_to_json(const Report &report) {
  return detail::report_to_json(report);
}

// Render the report; bytes are identical across runs for identical
// scenario+seed.
inline std::string emit_report(const Report &report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text:
      return detail::emit_text(report);
    case ReportFormat::Csv:
      return detail::emit_csv(report);
    case ReportFormat::Json:
      return detail::report_to_json(report).dump(2) + "\n";
  }
  throw Error("emit_report: unreachable format");
}

inline std::string emit_report(const Report &report, const std::string &format) {
  return emit_report(report, parse_format(format));
}

}  // namespace qmeas::engine
