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

// Command-line front end.
//
//   qmeas run --scenario <path> [--format text|csv|json] [--out <path>]
//             [--seed <integer>]
//   qmeas validate --scenario <path>
//   qmeas demo <name> [--format ...] [--out ...] [--seed ...]
//
// Exit codes: 0 all checks pass, 1 any check fails, 2 input error
// (`validate` exits 0 for a valid scenario and 1 otherwise).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qmeas/qmeas.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct OutputOptions {
  std::string format = "text";
  std::string outPath;
  std::optional<std::uint64_t> seedOverride;
};

int run_scenario(qmeas::engine::Scenario scenario, const OutputOptions &opts) {
  if (opts.seedOverride) scenario.monteCarlo.seed = *opts.seedOverride;
  const qmeas::engine::ReportFormat format =
      qmeas::engine::parse_format(opts.format);
  const qmeas::engine::Report report = qmeas::engine::run_checks(scenario);
  const std::string bytes = qmeas::engine::emit_report(report, format);
  if (opts.outPath.empty()) {
    std::cout << bytes;
  } else {
    std::ofstream out(opts.outPath, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file '" << opts.outPath << "'\n";
      return kExitInputError;
    }
    out << bytes;
  }
  return report.all_passed() ? kExitPass : kExitCheckFailed;
}

void add_output_options(CLI::App *cmd, OutputOptions &opts) {
  cmd->add_option("--format", opts.format, "Report format: text, csv or json")
      ->default_val("text");
  cmd->add_option("--out", opts.outPath,
                  "Write the report to this file instead of stdout");
  cmd->add_option("--seed", opts.seedOverride,
                  "Override the scenario's Monte Carlo seed");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qmeas: finite-dimensional quantum measurement model simulator"};
  app.require_subcommand(1);

  std::string scenarioPath;
  std::string demoName;
  OutputOptions runOpts, demoOpts;

  CLI::App *run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("--scenario", scenarioPath, "Scenario JSON file")->required();
  add_output_options(run, runOpts);

  CLI::App *validate = app.add_subcommand(
      "validate", "Parse a scenario file and check its invariants");
  std::string validatePath;
  validate->add_option("--scenario", validatePath, "Scenario JSON file")
      ->required();

  CLI::App *demo = app.add_subcommand("demo", "Run a shipped stock scenario");
  demo->add_option("name", demoName,
                   "One of: two-level, atom-beam-timing, chain-three-system, "
                   "bayes-contrast")
      ->required();
  add_output_options(demo, demoOpts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (run->parsed())
      return run_scenario(qmeas::engine::load_scenario(scenarioPath), runOpts);
    if (validate->parsed()) {
      try {
        qmeas::engine::load_scenario(validatePath);
      } catch (const qmeas::Error &e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 1;
      }
      std::cout << "valid\n";
      return 0;
    }
    if (demo->parsed()) {
      qmeas::engine::Scenario scenario =
          qmeas::engine::parse_scenario(qmeas::engine::stock_scenario(demoName));
      std::cerr << "demo '" << demoName
                << "': stock scenario with illustrative timing values\n";
      return run_scenario(std::move(scenario), demoOpts);
    }
  } catch (const qmeas::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
