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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cubecert {

struct Axis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 2;

  // Grid value i of steps; i = steps - 1 gives hi exactly.
  double at(std::size_t i) const;
  double spacing() const { return (hi - lo) / static_cast<double>(steps - 1); }
};

enum class Constraint {
  kAbsBLeY,    // |b| <= y
  kAPositive,  // a > 0
  kXPositive,  // x > 0
};
const char* to_string(Constraint c);
// Throws ConfigError on an unknown name.
Constraint constraint_from_string(const std::string& name);

struct GridSpec {
  std::vector<Axis> axes;
  std::vector<Constraint> constraints;
  double tolerance = 1e-9;
  // |margin| below this marks a point as tight.
  double tight_threshold = 1e-7;
  // Tight points refined on an 11-point-per-axis local grid, tightest first.
  std::size_t max_refine = 32;
  bool refine = true;
  // Extra uniformly random points per refined cell, drawn from seed.
  std::size_t random_refine = 16;
  std::uint64_t seed = 1;
  // scan_E_monotone only: points of the t-grid on [0, 1].
  std::size_t t_steps = 101;
  unsigned threads = 0;

  const Axis& axis(const std::string& name) const;
  // Replaces the range of an existing axis. Throws ConfigError if the axis is
  // missing, the range is not finite or lo > hi, or steps < 2.
  void set_axis(const std::string& name, double lo, double hi, std::size_t steps);
  // Throws ConfigError for the violations listed at set_axis and for axes
  // other than the expected ones (in order).
  void validate(const std::vector<std::string>& expected) const;
  nlohmann::json to_json() const;
};

struct ScanResult {
  std::string scan;
  std::uint64_t points_tested = 0;
  std::uint64_t refined_points = 0;
  double min_margin = 0.0;
  // Argmin point with a "kind" usable by replay.
  nlohmann::json witness = nlohmann::json::object();
  std::uint64_t violations = 0;
  std::uint64_t tight_points = 0;
  std::uint64_t clamped_radicands = 0;
  // Explicitly evaluated equality family (a = b = 0 for the two-point lemma);
  // equality_points = 0 when the scan has none.
  std::uint64_t equality_points = 0;
  double equality_max_abs = 0.0;
  double tolerance = 1e-9;
  double seconds = 0.0;

  bool passed() const { return violations == 0; }
  nlohmann::json to_json() const;
};

// Margins evaluated by the scans. Each is >= 0 when the inequality holds.
double main_lemma_margin(double x, double y, double a, double b);
double vector_lemma_margin(double x, double a, const std::vector<double>& y, const std::vector<double>& b);
double reduced_main_margin(double x, double y, double b);
double E_value(double x, double y, double a, double b, double t);
double E_step_margin(double x, double y, double a, double b, double t0, double t1);
double impr2_margin(double x, double y);

// Axes x, y, a, b. Default: x in [-10, 10], y in [0, 10], a, b in [-5, 5], 50 steps each.
GridSpec default_main_lemma_grid();
// Axes x, y, b with |b| <= y.
GridSpec default_reduced_main_grid();
// Axes x, y, a, b with a > 0, plus t_steps.
GridSpec default_E_grid();
// Axes x, y with x > 0.
GridSpec default_impr2_grid();

ScanResult scan_main_lemma(const GridSpec& spec);
// Throws DomainError unless 1 <= N <= 16.
ScanResult scan_vector_lemma(unsigned N, std::uint64_t trials, std::uint64_t seed, double tolerance = 1e-9,
                             unsigned threads = 0);
ScanResult scan_reduced_main(const GridSpec& spec);
ScanResult scan_E_monotone(const GridSpec& spec);
ScanResult scan_impr2(const GridSpec& spec);

// Recomputes the margin recorded in a scan witness.
double replay_scan_witness(const nlohmann::json& witness);

}  // namespace cubecert
