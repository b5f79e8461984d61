// Copyright 2026 The cubecert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cubecert {

inline constexpr int kReportSchemaVersion = 1;

// Process exit codes.
enum ExitCode : int {
  kExitPass = 0,
  kExitRefuted = 1,
  kExitUndecided = 2,
  kExitConfig = 3,
  kExitIo = 4,
};

struct RunConfig {
  // Selected checks in canonical order, without duplicates.
  std::vector<std::string> checks;
  std::uint64_t seed = 7;
  // Report path; empty means no file.
  std::string out;
  // Cube checks: a single dimension instead of 1..4, and trials per dimension.
  std::optional<unsigned> n;
  std::uint64_t trials = 100000;
  std::size_t b_samples = 1001;
  std::size_t asymptotics_samples = 20;
  unsigned vector_dim = 8;
  std::uint64_t vector_trials = 1000000;
  double tolerance = 1e-9;
  unsigned threads = 0;
  int verbosity = 1;
  // Directory of *.poly golden files; empty uses the compiled-in set.
  std::string golden_dir;
  // Scan grid settings, "<scan>.<field>" -> value, validated when set.
  std::map<std::string, std::string> scan_overrides;

  static const std::vector<std::string>& known_checks();
  // Adds a check; "all" selects every check. Throws ConfigError on an unknown name.
  void select(const std::string& name);
  // Sets one key of the flat key = value format. Throws ConfigError.
  void set(const std::string& key, const std::string& value);
  // Reads "key = value" lines; '#' starts a comment. Throws IoError if the
  // file cannot be read and ConfigError on a bad line.
  void load_file(const std::string& path);
  nlohmann::json to_json() const;
};

enum class CheckStatus { kPass, kRefuted, kUndecided, kError };
const char* to_string(CheckStatus s);

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::kUndecided;
  double seconds = 0.0;
  nlohmann::json summary = nlohmann::json::object();
  nlohmann::json certificates = nlohmann::json::array();
  nlohmann::json witnesses = nlohmann::json::array();
  std::string message;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckReport> checks;
  double seconds = 0.0;

  // Every selected check passed.
  bool pass() const;
  // 0 on pass; 1 if some check is refuted or failed with an error; 2 if the
  // remaining failures are all undecided.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string summary_text() const;
};

// Runs one check by name. Throws ConfigError on an unknown name.
CheckReport run_check(const std::string& name, const RunConfig& config);
// Runs the selected checks on a worker pool; an empty selection runs all.
VerificationReport run(const RunConfig& config);
// Throws IoError.
void write_report(const VerificationReport& report, const std::string& path);

struct ReplayEntry {
  std::string kind;
  // Both sides of the inequality (or the relevant quantities) at full precision.
  nlohmann::json values = nlohmann::json::object();
  std::string text;
};

// Accepts a single witness, an array of witnesses or a whole report.
// Throws ParseError on malformed input.
std::vector<ReplayEntry> replay(const nlohmann::json& doc);
// Throws IoError if the file cannot be read, ParseError if it is not JSON.
std::vector<ReplayEntry> replay_file(const std::string& path);

}  // namespace cubecert
