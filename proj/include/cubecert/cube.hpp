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

// M(x, y) = (2x - r) sqrt(r + x) / sqrt(2), r = sqrt(x^2 + y^2): the real part
// of (x + iy)^{3/2}. Throws DomainError for y < 0 or non-finite input.
double eval_M(double x, double y);
// |z|^{3/2} cos(3/2 arg z), arg in [0, pi].
double eval_M_polar(double x, double y);
// Closed-form partial derivatives, y >= 0.
double M_x(double x, double y);
double M_y(double x, double y);

// Real function on {-1,1}^n. Bit j of a vertex index is coordinate x_{j+1};
// a set bit means +1. n = 0 is the one-point cube.
class CubeFunction {
 public:
  static constexpr unsigned kMaxDimension = 20;

  CubeFunction() = default;
  // Throws DomainError on n > 20, a length other than 2^n or a non-finite value.
  CubeFunction(unsigned n, std::vector<double> values);
  static CubeFunction constant(unsigned n, double c);

  unsigned n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t v) const { return values_[v]; }
  double mean() const;
  double min() const;

  nlohmann::json to_json() const;
  // Throws ParseError for malformed input.
  static CubeFunction from_json(const nlohmann::json& j);
  // "n v_0 v_1 ... v_{2^n-1}" with round-trip precision.
  std::string to_text() const;
  static CubeFunction from_text(const std::string& text);

 private:
  unsigned n_ = 0;
  std::vector<double> values_ = {0.0};
};

// +1 or -1: coordinate x_{j+1} of vertex v.
inline int coordinate(std::size_t v, unsigned j) { return ((v >> j) & 1U) != 0 ? 1 : -1; }

struct GradientField {
  unsigned n = 0;
  // component(v, j) = (f(v with x_{j+1} = 1) - f(v with x_{j+1} = -1)) / 2
  std::vector<double> components;
  std::vector<double> norms;

  double component(std::size_t v, unsigned j) const { return components[v * n + j]; }
};

GradientField gradient(const CubeFunction& f);

// M(E f, 0) - E M(f, |grad f|); the theorem says this is >= 0.
double theorem_margin(const CubeFunction& f);

struct MartingaleSequence {
  // levels[k] lives on {-1,1}^k; levels[n] = f, levels[0] = E f.
  std::vector<CubeFunction> levels;
  // differences[k] lives on {-1,1}^k, k < n:
  // f_{k+1}(x', x_{k+1}) = f_k(x') + x_{k+1} g^k(x').
  std::vector<CubeFunction> differences;
};

MartingaleSequence martingale_decompose(const CubeFunction& f);

struct SupermartingaleSteps {
  // Per step k: min and mean over x' of z_k(x') - (z_{k+1}(x',1) + z_{k+1}(x',-1))/2.
  std::vector<double> step_minima;
  std::vector<double> step_means;
  // Sum of the step means; equals theorem_margin(f) up to rounding.
  double telescoped = 0.0;
};

SupermartingaleSteps supermartingale_check(const CubeFunction& f);

struct CorollaryReport {
  double beckner_lhs = 0.0;
  double beckner_rhs = 0.0;
  double beckner_margin = 0.0;  // rhs - lhs
  bool concentration_evaluated = false;
  double concentration_lhs = 0.0;
  double concentration_rhs = 0.0;
  double concentration_margin = 0.0;
};

// The concentration bound needs f >= 0; with concentration = true and a
// negative value this throws DomainError.
CorollaryReport corollary_checks(const CubeFunction& f, bool concentration = true);

// ------------------------------------------------------------ sweeps

enum class Family { kUniform, kLinear, kProduct, kIndicator };
const char* to_string(Family f);

// Deterministic function of (seed, trial): the family rotates with the trial
// index and values satisfy max|f| <= 10. With nonnegative set, the values are
// shifted to be >= 0 (and rescaled into [0, 10]).
CubeFunction random_cube_function(unsigned n, std::uint64_t seed, std::uint64_t trial, bool nonnegative = false);

struct SweepResult {
  std::uint64_t functions = 0;
  double min_margin = 0.0;
  std::uint64_t violations = 0;
  CubeFunction witness;
  std::uint64_t witness_trial = 0;
  double seconds = 0.0;
};

enum class CubeCheck { kTheorem, kSupermartingale, kBeckner, kConcentration };

// Evaluates the check on trials random functions of dimension n (threads = 0
// picks the hardware concurrency). The merge is independent of scheduling.
SweepResult cube_sweep(CubeCheck check, unsigned n, std::uint64_t trials, std::uint64_t seed, double tolerance = 1e-9,
                       unsigned threads = 0);
// All functions on {-1,1}^n with values in grid (|grid|^(2^n) functions).
SweepResult cube_grid_sweep(CubeCheck check, unsigned n, const std::vector<double>& grid, double tolerance = 1e-9);

// Smallest margin of a single function under the given check.
double cube_check_margin(CubeCheck check, const CubeFunction& f);

}  // namespace cubecert
