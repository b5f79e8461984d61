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

// Command-line front end. Uses only the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubecert/cubecert.h"

namespace {

constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

int error_exit(cubecert_status s) {
  std::fprintf(stderr, "cubecert: %s\n", cubecert_last_error());
  return s == CUBECERT_ERR_IO ? kExitIo : kExitConfig;
}

struct Config {
  cubecert_config* handle = nullptr;
  Config() {
    if (cubecert_config_create(&handle) != CUBECERT_OK) handle = nullptr;
  }
  ~Config() { cubecert_config_destroy(handle); }
};

struct VerifyArgs {
  std::vector<std::string> checks;
  std::string config_file;
  std::vector<std::string> sets;
  std::string seed, out, n, trials, b_samples, threads;
  bool quiet = false;
};

int verify(const VerifyArgs& a) {
  Config cfg;
  if (!cfg.handle) return error_exit(CUBECERT_ERR_INTERNAL);
  cubecert_status s = CUBECERT_OK;
  if (!a.config_file.empty() && (s = cubecert_config_load_file(cfg.handle, a.config_file.c_str())) != CUBECERT_OK) {
    return error_exit(s);
  }
  const std::pair<const char*, const std::string*> flags[] = {{"seed", &a.seed}, {"out", &a.out},
                                                              {"n", &a.n},       {"trials", &a.trials},
                                                              {"b_samples", &a.b_samples}, {"threads", &a.threads}};
  for (const auto& [key, value] : flags) {
    if (!value->empty() && (s = cubecert_config_set(cfg.handle, key, value->c_str())) != CUBECERT_OK) {
      return error_exit(s);
    }
  }
  for (const auto& kv : a.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "cubecert: --set expects key=value, got '%s'\n", kv.c_str());
      return kExitConfig;
    }
    if ((s = cubecert_config_set(cfg.handle, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str())) != CUBECERT_OK) {
      return error_exit(s);
    }
  }
  for (const auto& c : a.checks) {
    if ((s = cubecert_config_select(cfg.handle, c.c_str())) != CUBECERT_OK) return error_exit(s);
  }

  cubecert_report* report = nullptr;
  if ((s = cubecert_run(cfg.handle, &report)) != CUBECERT_OK) return error_exit(s);
  int code = cubecert_report_exit_code(report);
  char* summary = nullptr;
  if (!a.quiet && cubecert_report_summary(report, &summary) == CUBECERT_OK) {
    std::fputs(summary, stdout);
    cubecert_string_free(summary);
  }
  const std::string out = cubecert_config_out(cfg.handle);
  if (!out.empty()) {
    if ((s = cubecert_report_write(report, out.c_str())) != CUBECERT_OK) code = error_exit(s);
    else if (!a.quiet) std::printf("report written to %s\n", out.c_str());
  }
  cubecert_report_destroy(report);
  return code;
}

int replay(const std::string& path, bool as_json) {
  char* text = nullptr;
  char* json = nullptr;
  const cubecert_status s = cubecert_replay_file(path.c_str(), &text, &json);
  if (s != CUBECERT_OK) return error_exit(s);
  std::fputs(as_json ? json : text, stdout);
  if (as_json) std::fputs("\n", stdout);
  cubecert_string_free(text);
  cubecert_string_free(json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suite for the 3/2-power Poincare inequality on the Hamming cube"};
  app.set_version_flag("--version", std::string(cubecert_version()));
  app.require_subcommand(1);

  std::string check_list;
  for (size_t i = 0; cubecert_check_name(i); ++i) check_list += std::string(i ? ", " : "") + cubecert_check_name(i);

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "Run checks and emit a report");
  v->add_option("checks", va.checks, "Checks to run (all, " + check_list + ")");
  v->add_option("--config", va.config_file, "Flat key = value config file");
  v->add_option("--seed", va.seed, "Seed for randomized sweeps");
  v->add_option("--out", va.out, "Write the JSON report here");
  v->add_option("--n", va.n, "Cube dimension for the cube checks (default 1..4)");
  v->add_option("--trials", va.trials, "Random functions per dimension");
  v->add_option("--b-samples", va.b_samples, "Number of b samples for the t4 sweep");
  v->add_option("--threads", va.threads, "Worker threads (0 = hardware)");
  v->add_option("--set", va.sets, "Extra config key=value (repeatable)");
  v->add_flag("-q,--quiet", va.quiet, "No human summary");

  std::string witness;
  bool as_json = false;
  auto* r = app.add_subcommand("replay", "Recompute a witness from a report or witness file");
  r->add_option("file", witness, "Witness or report JSON")->required();
  r->add_flag("--json", as_json, "Print values as JSON");

  auto* l = app.add_subcommand("list", "List check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (v->parsed()) return verify(va);
  if (r->parsed()) return replay(witness, as_json);
  if (l->parsed()) {
    for (size_t i = 0; cubecert_check_name(i); ++i) std::puts(cubecert_check_name(i));
    std::puts("all");
  }
  return 0;
}
