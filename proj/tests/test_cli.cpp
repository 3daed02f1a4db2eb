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

// End-to-end exercises of the installed CLI binary (exit codes, output
// files, determinism across processes).

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

std::string cli_path() { return QMEAS_CLI_PATH; }
fs::path scenario_dir() { return fs::path(QMEAS_SCENARIO_DIR); }

int run_command(const std::string &args) {
  const std::string command = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path temp_file(const std::string &name) {
  return fs::temp_directory_path() / ("qmeas-cli-" + name);
}

}  // namespace

TEST_CASE("validate accepts the shipped scenarios", "[cli]") {
  for (const char *name :
       {"two-level", "atom-beam-timing", "chain-three-system",
        "bayes-contrast"}) {
    const fs::path file = scenario_dir() / (std::string(name) + ".json");
    REQUIRE(run_command("validate --scenario \"" + file.string() + "\"") == 0);
  }
}

TEST_CASE("validate exits 1 on malformed or missing scenarios", "[cli]") {
  const fs::path bad = temp_file("bad.json");
  std::ofstream(bad) << "{\"objectDim\": 0}";
  REQUIRE(run_command("validate --scenario \"" + bad.string() + "\"") == 1);
  fs::remove(bad);
  REQUIRE(run_command("validate --scenario /nonexistent.json") == 1);
}

TEST_CASE("run emits a report file and exits 0 when all checks pass",
          "[cli]") {
  const fs::path scenario = scenario_dir() / "bayes-contrast.json";
  const fs::path out = temp_file("report.json");
  REQUIRE(run_command("run --scenario \"" + scenario.string() +
                      "\" --format json --out \"" + out.string() + "\"") == 0);
  const nlohmann::json report = nlohmann::json::parse(slurp(out));
  REQUIRE(report["allPassed"].get<bool>());
  REQUIRE(report["scenario"]["objectDim"].get<int>() == 2);
  fs::remove(out);
}

TEST_CASE("input errors exit with code 2", "[cli]") {
  const fs::path scenario = scenario_dir() / "bayes-contrast.json";
  REQUIRE(run_command("run --scenario \"" + scenario.string() +
                      "\" --format yaml") == 2);
  REQUIRE(run_command("run --scenario /nonexistent.json") == 2);
  REQUIRE(run_command("demo no-such-demo") == 2);
  REQUIRE(run_command("bogus-subcommand") == 2);
}

TEST_CASE("demo reports are byte-identical across runs", "[cli]") {
  const fs::path first = temp_file("demo1.csv");
  const fs::path second = temp_file("demo2.csv");
  REQUIRE(run_command("demo atom-beam-timing --format csv --out \"" +
                      first.string() + "\"") == 0);
  REQUIRE(run_command("demo atom-beam-timing --format csv --out \"" +
                      second.string() + "\"") == 0);
  REQUIRE(slurp(first) == slurp(second));
  fs::remove(first);
  fs::remove(second);
}

TEST_CASE("seed override changes the Monte Carlo stream but stays "
          "deterministic",
          "[cli]") {
  const fs::path a = temp_file("seed-a.json");
  const fs::path b = temp_file("seed-b.json");
  const fs::path c = temp_file("seed-c.json");
  REQUIRE(run_command("demo two-level --format json --seed 5 --out \"" +
                      a.string() + "\"") == 0);
  REQUIRE(run_command("demo two-level --format json --seed 5 --out \"" +
                      b.string() + "\"") == 0);
  REQUIRE(run_command("demo two-level --format json --seed 6 --out \"" +
                      c.string() + "\"") == 0);
  REQUIRE(slurp(a) == slurp(b));
  REQUIRE(slurp(a) != slurp(c));
  const nlohmann::json report = nlohmann::json::parse(slurp(a));
  REQUIRE(report["scenario"]["monteCarlo"]["seed"].get<int>() == 5);
  fs::remove(a);
  fs::remove(b);
  fs::remove(c);
}
