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

#include "cubecert/cubecert.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cubecert/cube.hpp"
#include "cubecert/errors.hpp"
#include "cubecert/runner.hpp"

struct cubecert_config {
  cubecert::RunConfig config;
};

struct cubecert_report {
  cubecert::VerificationReport report;
};

namespace {

thread_local std::string last_error;

cubecert_status fail(cubecert_status s, const char* message) {
  last_error = message;
  return s;
}

template <class F>
cubecert_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return CUBECERT_OK;
  } catch (const cubecert::DomainError& e) {
    return fail(CUBECERT_ERR_DOMAIN, e.what());
  } catch (const cubecert::ParseError& e) {
    return fail(CUBECERT_ERR_PARSE, e.what());
  } catch (const cubecert::ConfigError& e) {
    return fail(CUBECERT_ERR_CONFIG, e.what());
  } catch (const cubecert::IoError& e) {
    return fail(CUBECERT_ERR_IO, e.what());
  } catch (const cubecert::DivisionByZero& e) {
    return fail(CUBECERT_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const cubecert::RootCountError& e) {
    return fail(CUBECERT_ERR_ROOT_COUNT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CUBECERT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CUBECERT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CUBECERT_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void replay_out(const std::vector<cubecert::ReplayEntry>& entries, char** text, char** json) {
  std::string t;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries) {
    t += e.text;
    j.push_back({{"kind", e.kind}, {"values", e.values}});
  }
  char* tc = copy_string(t);
  if (json) {
    try {
      *json = copy_string(j.dump(2));
    } catch (...) {
      std::free(tc);
      throw;
    }
  }
  *text = tc;
}

}  // namespace

extern "C" {

const char* cubecert_version(void) { return CUBECERT_VERSION; }

const char* cubecert_last_error(void) { return last_error.c_str(); }

const char* cubecert_check_name(size_t i) {
  const auto& names = cubecert::RunConfig::known_checks();
  return i < names.size() ? names[i].c_str() : nullptr;
}

void cubecert_string_free(char* s) { std::free(s); }

cubecert_status cubecert_config_create(cubecert_config** out) {
  if (!out) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new cubecert_config(); });
}

void cubecert_config_destroy(cubecert_config* config) { delete config; }

cubecert_status cubecert_config_select(cubecert_config* config, const char* check) {
  if (!config || !check) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { config->config.select(check); });
}

cubecert_status cubecert_config_set(cubecert_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { config->config.set(key, value); });
}

cubecert_status cubecert_config_load_file(cubecert_config* config, const char* path) {
  if (!config || !path) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { config->config.load_file(path); });
}

const char* cubecert_config_out(const cubecert_config* config) { return config ? config->config.out.c_str() : ""; }

cubecert_status cubecert_run(const cubecert_config* config, cubecert_report** out) {
  if (!config || !out) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = new cubecert_report{cubecert::run(config->config)}; });
}

void cubecert_report_destroy(cubecert_report* report) { delete report; }

int cubecert_report_pass(const cubecert_report* report) { return report && report->report.pass() ? 1 : 0; }

int cubecert_report_exit_code(const cubecert_report* report) {
  return report ? report->report.exit_code() : cubecert::kExitConfig;
}

size_t cubecert_report_check_count(const cubecert_report* report) { return report ? report->report.checks.size() : 0; }

const char* cubecert_report_check_status(const cubecert_report* report, size_t i) {
  if (!report || i >= report->report.checks.size()) return nullptr;
  return cubecert::to_string(report->report.checks[i].status);
}

cubecert_status cubecert_report_json(const cubecert_report* report, char** out) {
  if (!report || !out) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = copy_string(report->report.to_json().dump(2)); });
}

cubecert_status cubecert_report_summary(const cubecert_report* report, char** out) {
  if (!report || !out) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { *out = copy_string(report->report.summary_text()); });
}

cubecert_status cubecert_report_write(const cubecert_report* report, const char* path) {
  if (!report || !path) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { cubecert::write_report(report->report, path); });
}

cubecert_status cubecert_replay_file(const char* path, char** text, char** json) {
  if (!path || !text) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] { replay_out(cubecert::replay_file(path), text, json); });
}

cubecert_status cubecert_replay_json(const char* document, char** text, char** json) {
  if (!document || !text) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
      throw cubecert::ParseError(e.what());
    }
    replay_out(cubecert::replay(doc), text, json);
  });
}

cubecert_status cubecert_eval_m(double x, double y, double* out) {
  if (!out) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = cubecert::eval_M(x, y); });
}

cubecert_status cubecert_theorem_margin(unsigned n, const double* values, size_t count, double* out) {
  if (!values || !out) return fail(CUBECERT_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    *out = cubecert::theorem_margin(cubecert::CubeFunction(n, std::vector<double>(values, values + count)));
  });
}

}  // extern "C"
