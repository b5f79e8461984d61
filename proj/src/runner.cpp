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

#include "cubecert/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "cubecert/cube.hpp"
#include "cubecert/errors.hpp"
#include "cubecert/proof.hpp"
#include "cubecert/scanner.hpp"

namespace cubecert {

using nlohmann::json;

namespace {

const std::vector<std::string> kChecks = {
    "elimination", "p-print",    "discriminant", "t1",        "t2",        "t3",
    "t4",          "asymptotics", "cube-theorem", "supermartingale", "corollaries", "scan-lemma",
    "scan-vector", "scan-main",  "scan-e",       "scan-impr2"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || !std::isfinite(d)) throw ConfigError(key + ": expected a number, got '" + v + "'");
  return d;
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError(key + ": expected a nonnegative integer, got '" + v + "'");
  }
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ConfigError(key + ": integer out of range");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

GridSpec default_grid(const std::string& scan) {
  if (scan == "scan-lemma") return default_main_lemma_grid();
  if (scan == "scan-main") return default_reduced_main_grid();
  if (scan == "scan-e") return default_E_grid();
  if (scan == "scan-impr2") return default_impr2_grid();
  throw ConfigError("no grid for '" + scan + "'");
}

void apply_scan_override(GridSpec& g, const std::string& key, const std::string& field, const std::string& value) {
  if (field == "tolerance") {
    g.tolerance = parse_double(key, value);
  } else if (field == "tight_threshold") {
    g.tight_threshold = parse_double(key, value);
  } else if (field == "refine") {
    g.refine = parse_bool(key, value);
  } else if (field == "max_refine") {
    g.max_refine = parse_uint(key, value);
  } else if (field == "random_refine") {
    g.random_refine = parse_uint(key, value);
  } else if (field == "t_steps") {
    g.t_steps = parse_uint(key, value);
  } else if (field == "constraints") {
    g.constraints.clear();
    for (const auto& c : split(value, ',')) {
      if (!c.empty()) g.constraints.push_back(constraint_from_string(c));
    }
  } else {
    const auto parts = split(value, ',');
    if (parts.size() != 3) throw ConfigError(key + ": expected lo,hi,steps");
    g.set_axis(field, parse_double(key, parts[0]), parse_double(key, parts[1]), parse_uint(key, parts[2]));
  }
}

}  // namespace

// ------------------------------------------------------------ RunConfig

const std::vector<std::string>& RunConfig::known_checks() { return kChecks; }

void RunConfig::select(const std::string& name) {
  if (name == "all") {
    checks = kChecks;
    return;
  }
  if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end()) {
    throw ConfigError("unknown check '" + name + "'");
  }
  if (std::find(checks.begin(), checks.end(), name) != checks.end()) return;
  checks.push_back(name);
  std::vector<std::string> ordered;
  for (const auto& c : kChecks) {
    if (std::find(checks.begin(), checks.end(), c) != checks.end()) ordered.push_back(c);
  }
  checks = ordered;
}

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
  const std::string key = trim(key_in), value = trim(value_in);
  if (key == "checks") {
    for (const auto& c : split(value, ',')) {
      if (!c.empty()) select(c);
    }
  } else if (key == "seed") {
    seed = parse_uint(key, value);
  } else if (key == "out") {
    out = value;
  } else if (key == "n") {
    const auto v = parse_uint(key, value);
    if (v < 1 || v > CubeFunction::kMaxDimension) throw ConfigError("n must be in [1, 20]");
    n = static_cast<unsigned>(v);
  } else if (key == "trials") {
    trials = parse_uint(key, value);
    if (trials == 0) throw ConfigError("trials must be positive");
  } else if (key == "b_samples" || key == "b-samples") {
    b_samples = parse_uint(key, value);
    if (b_samples < 2) throw ConfigError("b_samples must be >= 2");
  } else if (key == "asymptotics_samples") {
    asymptotics_samples = parse_uint(key, value);
    if (asymptotics_samples == 0) throw ConfigError("asymptotics_samples must be positive");
  } else if (key == "vector_dim") {
    const auto v = parse_uint(key, value);
    if (v < 1 || v > 16) throw ConfigError("vector_dim must be in [1, 16]");
    vector_dim = static_cast<unsigned>(v);
  } else if (key == "vector_trials") {
    vector_trials = parse_uint(key, value);
    if (vector_trials == 0) throw ConfigError("vector_trials must be positive");
  } else if (key == "tolerance") {
    tolerance = parse_double(key, value);
    if (tolerance < 0) throw ConfigError("tolerance must be >= 0");
  } else if (key == "threads") {
    threads = static_cast<unsigned>(parse_uint(key, value));
  } else if (key == "verbosity") {
    verbosity = static_cast<int>(parse_uint(key, value));
  } else if (key == "golden_dir") {
    golden_dir = value;
  } else if (const auto dot = key.find('.'); dot != std::string::npos) {
    const std::string scan = key.substr(0, dot), field = key.substr(dot + 1);
    GridSpec probe = default_grid(scan);
    for (const auto& [k, v] : scan_overrides) {
      if (k.rfind(scan + ".", 0) == 0) apply_scan_override(probe, k, k.substr(dot + 1), v);
    }
    apply_scan_override(probe, key, field, value);
    std::vector<std::string> names;
    for (const auto& a : probe.axes) names.push_back(a.name);
    probe.validate(names);
    scan_overrides[key] = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

json RunConfig::to_json() const {
  json j = {{"checks", checks},
            {"seed", seed},
            {"out", out},
            {"trials", trials},
            {"b_samples", b_samples},
            {"asymptotics_samples", asymptotics_samples},
            {"vector_dim", vector_dim},
            {"vector_trials", vector_trials},
            {"tolerance", tolerance},
            {"threads", threads},
            {"verbosity", verbosity},
            {"golden_dir", golden_dir},
            {"scan_overrides", scan_overrides}};
  j["n"] = n ? json(*n) : json(nullptr);
  return j;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kRefuted: return "refuted";
    case CheckStatus::kUndecided: return "undecided";
    case CheckStatus::kError: return "error";
  }
  return "error";
}

// ------------------------------------------------------------ checks

namespace {

CheckStatus from_status(Status s) {
  switch (s) {
    case Status::kVerified: return CheckStatus::kPass;
    case Status::kRefuted: return CheckStatus::kRefuted;
    case Status::kUndecided: return CheckStatus::kUndecided;
  }
  return CheckStatus::kUndecided;
}

CheckStatus worse(CheckStatus a, CheckStatus b) {
  auto rank = [](CheckStatus s) {
    switch (s) {
      case CheckStatus::kPass: return 0;
      case CheckStatus::kUndecided: return 1;
      case CheckStatus::kRefuted: return 2;
      case CheckStatus::kError: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

// Appends a certificate and folds its status into the check. Every verified
// claim is re-checked from its stored evidence.
void add_certificate(CheckReport& r, const LemmaCertificate& cert) {
  json refuted = json::array(), undecided = json::array();
  for (const auto& c : cert.claims) {
    if (c.status == Status::kRefuted) refuted.push_back(c.name);
    if (c.status == Status::kUndecided) undecided.push_back(c.name);
  }
  const auto failed = revalidate(cert);
  CheckStatus s = from_status(cert.status);
  if (!failed.empty()) s = worse(s, CheckStatus::kRefuted);
  r.status = r.certificates.empty() ? s : worse(r.status, s);
  if (!r.summary.contains("lemmas")) r.summary["lemmas"] = json::array();
  r.summary["lemmas"].push_back({{"lemma", cert.lemma_id},
                                 {"status", std::string(to_string(cert.status))},
                                 {"claims", cert.claims.size()},
                                 {"refuted_claims", refuted},
                                 {"undecided_claims", undecided},
                                 {"revalidation_failures", failed}});
  r.certificates.push_back(cert.to_json());
}

std::vector<std::pair<Rational, Rational>> asymptotic_samples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> kb(-40, 40), ky(0, 16);
  std::vector<std::pair<Rational, Rational>> out;
  while (out.size() < count) {
    const long k = kb(rng);
    if (k == 0) continue;
    const Rational b(k, 8);
    out.emplace_back(b, b.abs() + Rational(ky(rng), 4));
  }
  return out;
}

std::vector<unsigned> cube_dims(const RunConfig& c) {
  if (c.n) return {*c.n};
  return {1, 2, 3, 4};
}

const char* check_label(CubeCheck c) {
  switch (c) {
    case CubeCheck::kTheorem: return "theorem";
    case CubeCheck::kSupermartingale: return "supermartingale";
    case CubeCheck::kBeckner: return "beckner";
    case CubeCheck::kConcentration: return "concentration";
  }
  return "";
}

json sweep_json(const SweepResult& s) {
  return {{"functions", s.functions},
          {"min_margin", s.min_margin},
          {"violations", s.violations},
          {"seconds", s.seconds}};
}

// Runs the sweeps of one cube check and folds them into the report.
void cube_check(CheckReport& r, CubeCheck check, const RunConfig& c, bool with_grid) {
  json dims = json::array();
  SweepResult worst;
  bool have = false;
  std::uint64_t violations = 0;
  std::string source;
  auto fold = [&](const SweepResult& s, const std::string& from) {
    violations += s.violations;
    if (!have || s.min_margin < worst.min_margin) {
      worst = s;
      source = from;
      have = true;
    }
  };
  for (unsigned n : cube_dims(c)) {
    const SweepResult s = cube_sweep(check, n, c.trials, c.seed, c.tolerance, c.threads);
    json d = sweep_json(s);
    d["n"] = n;
    dims.push_back(d);
    fold(s, "random");
  }
  json out = {{"check", check_label(check)}, {"dimensions", dims}};
  if (with_grid && (!c.n || *c.n == 2)) {
    const SweepResult g = cube_grid_sweep(check, 2, {-2, -1, 0, 1, 2}, c.tolerance);
    out["grid"] = sweep_json(g);
    out["grid"]["values"] = json::array({-2, -1, 0, 1, 2});
    fold(g, "grid");
  }
  out["min_margin"] = worst.min_margin;
  out["violations"] = violations;
  if (!r.summary.contains("sweeps")) r.summary["sweeps"] = json::array();
  r.summary["sweeps"].push_back(out);
  json w = worst.witness.to_json();
  w["check"] = check_label(check);
  w["margin"] = worst.min_margin;
  w["source"] = source;
  if (source == "random") {
    w["seed"] = c.seed;
    w["trial"] = worst.witness_trial;
  }
  r.witnesses.push_back(w);
  const CheckStatus s = violations == 0 ? CheckStatus::kPass : CheckStatus::kRefuted;
  r.status = r.summary["sweeps"].size() == 1 ? s : worse(r.status, s);
}

GridSpec configured_grid(const std::string& scan, const RunConfig& c) {
  GridSpec g = default_grid(scan);
  g.tolerance = c.tolerance;
  g.seed = c.seed;
  g.threads = c.threads;
  for (const auto& [key, value] : c.scan_overrides) {
    if (key.rfind(scan + ".", 0) == 0) apply_scan_override(g, key, key.substr(scan.size() + 1), value);
  }
  return g;
}

void scan_check(CheckReport& r, const ScanResult& s) {
  r.summary = s.to_json();
  r.witnesses.push_back(s.witness);
  r.status = s.passed() ? CheckStatus::kPass : CheckStatus::kRefuted;
  if (s.equality_points > 0 && !(s.equality_max_abs < 1e-12)) {
    r.status = CheckStatus::kRefuted;
    r.message = "equality family not reproduced";
  }
}

void dispatch(CheckReport& r, const RunConfig& c) {
  const std::string& name = r.name;
  if (name == "elimination") {
    add_certificate(r, verify_elimination_from_main());
  } else if (name == "p-print") {
    add_certificate(r, verify_P_print(c.golden_dir.empty() ? GoldenSet::embedded()
                                                           : GoldenSet::from_directory(c.golden_dir)));
    add_certificate(r, verify_P_special_cases());
  } else if (name == "discriminant") {
    add_certificate(r, verify_discriminant_factorization());
  } else if (name == "t1") {
    add_certificate(r, verify_T1_negative());
  } else if (name == "t2") {
    add_certificate(r, verify_T2_case());
    const T2SpecialPoint p = t2_special_point(Rational(2));
    r.witnesses.push_back({{"kind", "t2_point"}, {"b", "2"}});
    r.summary["special_point_b2"] = {{"x", p.x.to_string()},
                                     {"y", p.y.to_string()},
                                     {"lhs_numerator", p.lhs_numerator.to_string()},
                                     {"rhs_numerator", p.rhs_numerator.to_string()}};
  } else if (name == "t3") {
    add_certificate(r, verify_T3());
  } else if (name == "t4") {
    add_certificate(r, verify_T4_positive(default_b_samples(c.b_samples)));
    r.summary["b_samples"] = default_b_samples(c.b_samples).size();
  } else if (name == "asymptotics") {
    add_certificate(r, verify_asymptotics(Rational(0), Rational(1)));
    for (const auto& [b, y] : asymptotic_samples(c.asymptotics_samples, c.seed)) {
      add_certificate(r, verify_asymptotics(b, y));
    }
  } else if (name == "cube-theorem") {
    cube_check(r, CubeCheck::kTheorem, c, true);
  } else if (name == "supermartingale") {
    cube_check(r, CubeCheck::kSupermartingale, c, true);
  } else if (name == "corollaries") {
    cube_check(r, CubeCheck::kBeckner, c, false);
    cube_check(r, CubeCheck::kConcentration, c, false);
  } else if (name == "scan-lemma") {
    scan_check(r, scan_main_lemma(configured_grid(name, c)));
  } else if (name == "scan-vector") {
    scan_check(r, scan_vector_lemma(c.vector_dim, c.vector_trials, c.seed, c.tolerance, c.threads));
    r.summary["N"] = c.vector_dim;
  } else if (name == "scan-main") {
    scan_check(r, scan_reduced_main(configured_grid(name, c)));
  } else if (name == "scan-e") {
    scan_check(r, scan_E_monotone(configured_grid(name, c)));
  } else if (name == "scan-impr2") {
    scan_check(r, scan_impr2(configured_grid(name, c)));
  } else {
    throw ConfigError("unknown check '" + name + "'");
  }
}

}  // namespace

CheckReport run_check(const std::string& name, const RunConfig& config) {
  if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end()) {
    throw ConfigError("unknown check '" + name + "'");
  }
  CheckReport r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(r, config);
  } catch (const ConfigError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    // The elimination step is best effort: a failure to carry it out leaves
    // it undecided.
    r.status = name == "elimination" ? CheckStatus::kUndecided : CheckStatus::kError;
    r.message = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport run(const RunConfig& config_in) {
  VerificationReport report;
  report.config = config_in;
  if (report.config.checks.empty()) report.config.select("all");
  const auto& names = report.config.checks;
  const auto start = std::chrono::steady_clock::now();
  report.checks.resize(names.size());
  std::vector<std::exception_ptr> errors(names.size());
  unsigned workers = config_in.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config_in.threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(names.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < names.size(); i = next++) {
        try {
          report.checks[i] = run_check(names[i], report.config);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.status == CheckStatus::kPass; });
}

int VerificationReport::exit_code() const {
  if (pass()) return kExitPass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kRefuted || c.status == CheckStatus::kError) return kExitRefuted;
  }
  return kExitUndecided;
}

json VerificationReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    json j = {{"name", c.name},
              {"status", to_string(c.status)},
              {"seconds", c.seconds},
              {"summary", c.summary},
              {"certificates", c.certificates},
              {"witnesses", c.witnesses}};
    if (!c.message.empty()) j["message"] = c.message;
    cs.push_back(j);
  }
  return {{"schema_version", kReportSchemaVersion},
          {"tool", "cubecert"},
          {"version", CUBECERT_VERSION},
          {"config", config.to_json()},
          {"checks", cs},
          {"pass", pass()},
          {"exit_code", exit_code()},
          {"seconds", seconds}};
}

std::string VerificationReport::summary_text() const {
  std::ostringstream out;
  char line[256];
  for (const auto& c : checks) {
    std::string detail;
    if (c.summary.contains("min_margin")) {
      detail = "min margin " + json(c.summary["min_margin"].get<double>()).dump() + ", violations " +
               c.summary["violations"].dump();
    } else if (c.summary.contains("sweeps")) {
      for (const auto& s : c.summary["sweeps"]) {
        if (!detail.empty()) detail += "; ";
        detail += s["check"].get<std::string>() + " min margin " + s["min_margin"].dump() + ", violations " +
                  s["violations"].dump();
      }
    } else if (c.summary.contains("lemmas")) {
      std::size_t claims = 0;
      std::vector<std::string> bad;
      for (const auto& l : c.summary["lemmas"]) {
        claims += l["claims"].get<std::size_t>();
        for (const auto& n : l["refuted_claims"]) bad.push_back("refuted " + n.get<std::string>());
        for (const auto& n : l["undecided_claims"]) bad.push_back("undecided " + n.get<std::string>());
        for (const auto& n : l["revalidation_failures"]) bad.push_back("not revalidated " + n.get<std::string>());
      }
      detail = std::to_string(claims) + " claims";
      for (const auto& b : bad) detail += ", " + b;
    }
    if (!c.message.empty()) detail += (detail.empty() ? "" : ", ") + c.message;
    if (config.verbosity < 1) continue;
    std::snprintf(line, sizeof line, "%-16s %-9s %8.2fs  ", c.name.c_str(), to_string(c.status), c.seconds);
    out << line << detail << '\n';
    if (config.verbosity < 2) continue;
    for (const auto& l : c.summary.value("lemmas", json::array())) {
      out << "    " << l["lemma"].get<std::string>() << ": " << l["status"].get<std::string>() << ", "
          << l["claims"].dump() << " claims\n";
    }
    for (const auto& s : c.summary.value("sweeps", json::array())) {
      for (const auto& d : s["dimensions"]) {
        out << "    " << s["check"].get<std::string>() << " n=" << d["n"].dump() << ": " << d["functions"].dump()
            << " functions, min margin " << d["min_margin"].dump() << '\n';
      }
    }
  }
  out << (pass() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, exit " << exit_code() << ")\n";
  return out.str();
}

void write_report(const VerificationReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write report to " + path);
  out << report.to_json().dump(2) << '\n';
  if (!out) throw IoError("failed writing report to " + path);
}

// ------------------------------------------------------------ replay

namespace {

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ReplayEntry sides_entry(const std::string& kind, const std::string& lhs_label, double lhs,
                        const std::string& rhs_label, double rhs, double margin, json point) {
  ReplayEntry e;
  e.kind = kind;
  e.values = {{"point", std::move(point)}, {"lhs", lhs}, {"rhs", rhs}, {"margin", margin}};
  e.text = kind + " at " + e.values["point"].dump() + "\n  " + lhs_label + " = " + full(lhs) + "\n  " + rhs_label +
           " = " + full(rhs) + "\n  margin = " + full(margin) + "\n";
  return e;
}

double num(const json& j, const char* key) { return j.at(key).get<double>(); }

ReplayEntry replay_one(const json& w) {
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "lemma_point") {
    const double x = num(w, "x"), y = num(w, "y"), a = num(w, "a"), b = num(w, "b");
    const double lhs = eval_M(x, y);
    const double rhs = (eval_M(x + a, std::sqrt(a * a + (y + b) * (y + b))) +
                        eval_M(x - a, std::sqrt(a * a + (y - b) * (y - b)))) / 2;
    return sides_entry(kind, "M(x, y)", lhs, "(M(x+a, .) + M(x-a, .))/2", rhs, main_lemma_margin(x, y, a, b),
                       {{"x", x}, {"y", y}, {"a", a}, {"b", b}});
  }
  if (kind == "vector_lemma") {
    const double m = replay_scan_witness(w);
    const double x = num(w, "x"), a = num(w, "a");
    const auto y = w.at("y").get<std::vector<double>>();
    double ny = 0;
    for (double v : y) ny += v * v;
    const double lhs = eval_M(x, std::sqrt(ny));
    return sides_entry(kind, "M(x, |y|)", lhs, "average", lhs - m, m,
                       {{"x", x}, {"a", a}, {"y", w.at("y")}, {"b", w.at("b")}});
  }
  if (kind == "reduced_main") {
    const double x = num(w, "x"), y = num(w, "y"), b = num(w, "b");
    const auto s = reduced_main_sides(x, y, b);
    return sides_entry(kind, "lhs", s.lhs, "rhs", s.rhs, reduced_main_margin(x, y, b), {{"x", x}, {"y", y}, {"b", b}});
  }
  if (kind == "e_step") {
    const double x = num(w, "x"), y = num(w, "y"), a = num(w, "a"), b = num(w, "b");
    const double t0 = num(w, "t0"), t1 = num(w, "t1");
    return sides_entry(kind, "E(t1)", E_value(x, y, a, b, t1), "E(t0)", E_value(x, y, a, b, t0),
                       E_step_margin(x, y, a, b, t0, t1),
                       {{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"t0", t0}, {"t1", t1}});
  }
  if (kind == "impr2") {
    const double x = num(w, "x"), y = num(w, "y");
    if (!(x > 0)) throw ParseError("impr2 witness needs x > 0");
    const double lhs = x * std::sqrt(x) - eval_M(x, y);
    return sides_entry(kind, "x^(3/2) - M(x, y)", lhs, "(3/8) y^2 / sqrt(x)", 0.375 * y * y / std::sqrt(x),
                       impr2_margin(x, y), {{"x", x}, {"y", y}});
  }
  if (kind == "cube_function") {
    const CubeFunction f = CubeFunction::from_json(w);
    const std::string check = w.value("check", "theorem");
    if (check == "theorem") {
      const GradientField g = gradient(f);
      double s = 0;
      for (std::size_t v = 0; v < f.size(); ++v) s += eval_M(f[v], g.norms[v]);
      return sides_entry(kind, "E M(f, |grad f|)", s / static_cast<double>(f.size()), "M(E f, 0)",
                         eval_M(f.mean(), 0.0), theorem_margin(f), f.to_json());
    }
    if (check == "supermartingale") {
      const auto steps = supermartingale_check(f);
      ReplayEntry e;
      e.kind = kind;
      e.values = {{"point", f.to_json()},
                  {"step_minima", steps.step_minima},
                  {"step_means", steps.step_means},
                  {"margin", cube_check_margin(CubeCheck::kSupermartingale, f)}};
      e.text = "supermartingale steps for " + f.to_text() + "\n";
      for (std::size_t k = 0; k < steps.step_minima.size(); ++k) {
        e.text += "  step " + std::to_string(k) + ": min " + full(steps.step_minima[k]) + ", mean " +
                  full(steps.step_means[k]) + "\n";
      }
      return e;
    }
    if (check == "beckner") {
      const auto c = corollary_checks(f, false);
      return sides_entry(kind, "beckner lhs", c.beckner_lhs, "beckner rhs", c.beckner_rhs, c.beckner_margin,
                         f.to_json());
    }
    if (check == "concentration") {
      try {
        const auto c = corollary_checks(f, true);
        return sides_entry(kind, "concentration lhs", c.concentration_lhs, "concentration rhs", c.concentration_rhs,
                           c.concentration_margin, f.to_json());
      } catch (const DomainError& e) {
        throw ParseError(std::string("concentration witness: ") + e.what());
      }
    }
    throw ParseError("unknown cube check '" + check + "'");
  }
  if (kind == "t2_point") {
    const json& bj = w.at("b");
    const Rational b = bj.is_string() ? Rational::from_string(bj.get<std::string>()) : Rational(bj.get<long>());
    T2SpecialPoint p;
    try {
      p = t2_special_point(b);
    } catch (const DomainError& e) {
      throw ParseError(std::string("t2 witness: ") + e.what());
    }
    auto approx = [](const QuadExt& q) {
      const auto iv = q.to_expr().enclose(200);
      return iv ? iv->midpoint().to_double() : std::nan("");
    };
    const double xd = approx(p.x), yd = approx(p.y);
    const auto sides = reduced_main_sides(xd, yd, b.to_double());
    ReplayEntry e;
    e.kind = kind;
    e.values = {{"point", {{"b", b.to_string()}, {"x", p.x.to_string()}, {"y", p.y.to_string()}}},
                {"lhs_numerator", p.lhs_numerator.to_string()},
                {"rhs_numerator", p.rhs_numerator.to_string()},
                {"lhs_numerator_value", approx(p.lhs_numerator)},
                {"rhs_numerator_value", approx(p.rhs_numerator)},
                {"lhs", sides.lhs},
                {"rhs", sides.rhs}};
    e.text = "t2_point at b = " + b.to_string() + ", x = " + p.x.to_string() + ", y = " + p.y.to_string() +
             "\n  lhs numerator = " + p.lhs_numerator.to_string() + " = " + full(approx(p.lhs_numerator)) +
             "\n  rhs numerator = " + p.rhs_numerator.to_string() + " = " + full(approx(p.rhs_numerator)) +
             "\n  lhs = " + full(sides.lhs) + "\n  rhs = " + full(sides.rhs) + "\n";
    return e;
  }
  throw ParseError("unknown witness kind '" + kind + "'");
}

}  // namespace

std::vector<ReplayEntry> replay(const json& doc) {
  std::vector<ReplayEntry> out;
  try {
    if (doc.is_array()) {
      for (const auto& w : doc) out.push_back(replay_one(w));
    } else if (doc.is_object() && doc.contains("checks")) {
      for (const auto& c : doc.at("checks")) {
        for (const auto& w : c.at("witnesses")) out.push_back(replay_one(w));
      }
    } else if (doc.is_object()) {
      out.push_back(replay_one(doc));
    } else {
      throw ParseError("witness must be a JSON object");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("witness outside the domain: ") + e.what());
  }
  return out;
}

std::vector<ReplayEntry> replay_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read witness file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return replay(doc);
}

}  // namespace cubecert
