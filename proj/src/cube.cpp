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

#include "cubecert/cube.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "cubecert/errors.hpp"

namespace cubecert {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kDerivScale = 3.0 / (2.0 * kSqrt2);

void check_args(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("M needs finite arguments");
  if (y < 0) throw DomainError("M is defined for y >= 0");
}

// r + x and r - x with r = hypot(x, y), without cancellation.
double r_plus_x(double x, double y, double r) { return x >= 0 ? r + x : (r == x ? 0.0 : y * y / (r - x)); }
double r_minus_x(double x, double y, double r) { return x <= 0 ? r - x : y * y / (r + x); }

}  // namespace

double eval_M(double x, double y) {
  check_args(x, y);
  const double r = std::hypot(x, y);
  return (2 * x - r) * std::sqrt(r_plus_x(x, y, r)) / kSqrt2;
}

double eval_M_polar(double x, double y) {
  check_args(x, y);
  const double r = std::hypot(x, y);
  return std::pow(r, 1.5) * std::cos(1.5 * std::atan2(y, x));
}

double M_x(double x, double y) {
  check_args(x, y);
  return kDerivScale * std::sqrt(r_plus_x(x, y, std::hypot(x, y)));
}

double M_y(double x, double y) {
  check_args(x, y);
  return -kDerivScale * std::sqrt(r_minus_x(x, y, std::hypot(x, y)));
}

// ------------------------------------------------------------ CubeFunction

CubeFunction::CubeFunction(unsigned n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n > kMaxDimension) throw DomainError("cube dimension above " + std::to_string(kMaxDimension));
  if (values_.size() != (std::size_t{1} << n)) {
    throw DomainError("cube function on n = " + std::to_string(n) + " needs " + std::to_string(1U << n) + " values");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("cube function values must be finite");
  }
}

CubeFunction CubeFunction::constant(unsigned n, double c) {
  if (n > kMaxDimension) throw DomainError("cube dimension above " + std::to_string(kMaxDimension));
  return CubeFunction(n, std::vector<double>(std::size_t{1} << n, c));
}

double CubeFunction::mean() const {
  double s = 0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double CubeFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }

nlohmann::json CubeFunction::to_json() const { return {{"kind", "cube_function"}, {"n", n_}, {"values", values_}}; }

CubeFunction CubeFunction::from_json(const nlohmann::json& j) {
  try {
    return CubeFunction(j.at("n").get<unsigned>(), j.at("values").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cube function: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed cube function: ") + e.what());
  }
}

std::string CubeFunction::to_text() const {
  std::ostringstream out;
  out << n_ << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (double v : values_) out << ' ' << v;
  return out.str();
}

CubeFunction CubeFunction::from_text(const std::string& text) {
  std::istringstream in(text);
  unsigned n;
  if (!(in >> n)) throw ParseError("cube function text must start with n");
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw ParseError("bad value in cube function text");
  try {
    return CubeFunction(n, std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ------------------------------------------------------------ analysis

GradientField gradient(const CubeFunction& f) {
  GradientField g;
  g.n = f.n();
  g.components.resize(f.size() * f.n());
  g.norms.resize(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    double sq = 0;
    for (unsigned j = 0; j < f.n(); ++j) {
      const std::size_t bit = std::size_t{1} << j;
      const double d = (f[v | bit] - f[v & ~bit]) / 2;
      g.components[v * f.n() + j] = d;
      sq += d * d;
    }
    g.norms[v] = std::sqrt(sq);
  }
  return g;
}

double theorem_margin(const CubeFunction& f) {
  const GradientField g = gradient(f);
  double s = 0;
  for (std::size_t v = 0; v < f.size(); ++v) s += eval_M(f[v], g.norms[v]);
  return eval_M(f.mean(), 0.0) - s / static_cast<double>(f.size());
}

MartingaleSequence martingale_decompose(const CubeFunction& f) {
  const unsigned n = f.n();
  MartingaleSequence m;
  m.levels.resize(n + 1);
  m.differences.resize(n);
  m.levels[n] = f;
  for (unsigned k = n; k-- > 0;) {
    const CubeFunction& up = m.levels[k + 1];
    const std::size_t size = std::size_t{1} << k;
    std::vector<double> level(size), diff(size);
    for (std::size_t v = 0; v < size; ++v) {
      const double plus = up[v | size], minus = up[v];
      level[v] = (plus + minus) / 2;
      diff[v] = (plus - minus) / 2;
    }
    m.levels[k] = CubeFunction(k, std::move(level));
    m.differences[k] = CubeFunction(k, std::move(diff));
  }
  return m;
}

SupermartingaleSteps supermartingale_check(const CubeFunction& f) {
  const MartingaleSequence m = martingale_decompose(f);
  SupermartingaleSteps out;
  for (unsigned k = 0; k < f.n(); ++k) {
    const CubeFunction& fk = m.levels[k];
    const CubeFunction& g = m.differences[k];
    const GradientField dfk = gradient(fk);
    const GradientField dg = gradient(g);
    double lo = std::numeric_limits<double>::infinity(), sum = 0;
    for (std::size_t v = 0; v < fk.size(); ++v) {
      double sq_plus = g[v] * g[v], sq_minus = g[v] * g[v];
      for (unsigned j = 0; j < k; ++j) {
        const double a = dfk.component(v, j), b = dg.component(v, j);
        sq_plus += (a + b) * (a + b);
        sq_minus += (a - b) * (a - b);
      }
      const double z = eval_M(fk[v], dfk.norms[v]);
      const double z_next = (eval_M(fk[v] + g[v], std::sqrt(sq_plus)) + eval_M(fk[v] - g[v], std::sqrt(sq_minus))) / 2;
      const double margin = z - z_next;
      lo = std::min(lo, margin);
      sum += margin;
    }
    out.step_minima.push_back(lo);
    out.step_means.push_back(sum / static_cast<double>(fk.size()));
    out.telescoped += out.step_means.back();
  }
  return out;
}

CorollaryReport corollary_checks(const CubeFunction& f, bool concentration) {
  const GradientField g = gradient(f);
  const double size = static_cast<double>(f.size());
  const double mean = f.mean();
  auto pos15 = [](double t) { return t > 0 ? t * std::sqrt(t) : 0.0; };
  CorollaryReport r;
  double lhs = 0, rhs = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    lhs += pos15(f[v]);
    rhs += pos15(f[v]) - eval_M(f[v], g.norms[v]);
  }
  r.beckner_lhs = lhs / size - pos15(mean);
  r.beckner_rhs = rhs / size;
  r.beckner_margin = r.beckner_rhs - r.beckner_lhs;
  if (concentration) {
    if (f.min() < 0) throw DomainError("the concentration bound needs f >= 0");
    double a = 0, b = 0;
    for (std::size_t v = 0; v < f.size(); ++v) {
      a += f[v] * std::sqrt(f[v]);
      b += g.norms[v] * std::sqrt(g.norms[v]);
    }
    r.concentration_evaluated = true;
    r.concentration_lhs = a / size - mean * std::sqrt(mean);
    r.concentration_rhs = b / size / kSqrt2;
    r.concentration_margin = r.concentration_rhs - r.concentration_lhs;
  }
  return r;
}

// ------------------------------------------------------------ sweeps

const char* to_string(Family f) {
  switch (f) {
    case Family::kUniform: return "uniform";
    case Family::kLinear: return "linear";
    case Family::kProduct: return "product";
    case Family::kIndicator: return "indicator";
  }
  return "uniform";
}

CubeFunction random_cube_function(unsigned n, std::uint64_t seed, std::uint64_t trial, bool nonnegative) {
  std::mt19937_64 rng(seed ^ (trial * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> v(size);
  switch (static_cast<Family>(trial % 4)) {
    case Family::kUniform:
      for (auto& x : v) x = 5 * unit(rng);
      break;
    case Family::kLinear: {
      std::vector<double> a(n + 1);
      for (auto& c : a) c = unit(rng);
      for (std::size_t i = 0; i < size; ++i) {
        double s = a[n];
        for (unsigned j = 0; j < n; ++j) s += a[j] * coordinate(i, j);
        v[i] = s;
      }
      break;
    }
    case Family::kProduct: {
      // c0 + c1 * prod_{j in S} x_j with a random nonempty S
      const std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(1, size - 1 > 0 ? size - 1 : 1)(rng);
      const double c0 = 2 * unit(rng), c1 = 2 * unit(rng);
      for (std::size_t i = 0; i < size; ++i) {
        int p = 1;
        for (unsigned j = 0; j < n; ++j) {
          if ((mask >> j) & 1U) p *= coordinate(i, j);
        }
        v[i] = c0 + c1 * p;
      }
      break;
    }
    case Family::kIndicator: {
      // +-1 valued up to a small perturbation
      const double eps = std::pow(10.0, -1 - 5 * std::abs(unit(rng)));
      for (auto& x : v) x = (unit(rng) < 0 ? -1.0 : 1.0) + eps * unit(rng);
      break;
    }
  }
  double peak = 0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  if (peak > 10) {
    for (auto& x : v) x *= 10 / peak;
  }
  if (nonnegative) {
    const double lo = *std::min_element(v.begin(), v.end());
    // Shift so that the minimum is a random point of [0, 1); half the time
    // the minimum sits exactly at 0, where the bounds are tightest.
    const double floor = (trial / 4) % 2 == 0 ? 0.0 : (unit(rng) + 1) / 2;
    double hi = 0;
    for (auto& x : v) {
      x = x - lo + floor;
      hi = std::max(hi, x);
    }
    if (hi > 10) {
      for (auto& x : v) x *= 10 / hi;
    }
  }
  return CubeFunction(n, std::move(v));
}

double cube_check_margin(CubeCheck check, const CubeFunction& f) {
  switch (check) {
    case CubeCheck::kTheorem: return theorem_margin(f);
    case CubeCheck::kSupermartingale: {
      const auto steps = supermartingale_check(f);
      double lo = std::numeric_limits<double>::infinity();
      for (double m : steps.step_minima) lo = std::min(lo, m);
      return steps.step_minima.empty() ? 0.0 : lo;
    }
    case CubeCheck::kBeckner: return corollary_checks(f, false).beckner_margin;
    case CubeCheck::kConcentration: return corollary_checks(f, true).concentration_margin;
  }
  return 0.0;
}

namespace {

bool nonnegative_corpus(CubeCheck c) { return c == CubeCheck::kConcentration || c == CubeCheck::kBeckner; }

void merge_into(SweepResult& into, const SweepResult& part) {
  const bool better = into.functions == 0 || part.min_margin < into.min_margin ||
                      (part.min_margin == into.min_margin && part.witness_trial < into.witness_trial);
  if (part.functions > 0 && better) {
    into.min_margin = part.min_margin;
    into.witness = part.witness;
    into.witness_trial = part.witness_trial;
  }
  into.functions += part.functions;
  into.violations += part.violations;
}

template <class Gen>
SweepResult sweep_range(CubeCheck check, std::uint64_t begin, std::uint64_t end, double tolerance, Gen&& gen) {
  SweepResult r;
  for (std::uint64_t t = begin; t < end; ++t) {
    const CubeFunction f = gen(t);
    const double m = cube_check_margin(check, f);
    if (r.functions == 0 || m < r.min_margin) {
      r.min_margin = m;
      r.witness = f;
      r.witness_trial = t;
    }
    if (m < -tolerance) ++r.violations;
    ++r.functions;
  }
  return r;
}

template <class Gen>
SweepResult parallel_sweep(CubeCheck check, std::uint64_t total, double tolerance, unsigned threads, Gen gen) {
  const auto start = std::chrono::steady_clock::now();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  std::vector<SweepResult> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t begin = total * i / threads, end = total * (i + 1) / threads;
    pool.emplace_back([&, i, begin, end] { parts[i] = sweep_range(check, begin, end, tolerance, gen); });
  }
  for (auto& t : pool) t.join();
  SweepResult out;
  for (const auto& p : parts) merge_into(out, p);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

SweepResult cube_sweep(CubeCheck check, unsigned n, std::uint64_t trials, std::uint64_t seed, double tolerance,
                       unsigned threads) {
  if (n < 1 || n > CubeFunction::kMaxDimension) throw DomainError("sweep dimension must be in [1, 20]");
  const bool nonneg = nonnegative_corpus(check);
  return parallel_sweep(check, trials, tolerance, threads,
                        [=](std::uint64_t t) { return random_cube_function(n, seed, t, nonneg); });
}

SweepResult cube_grid_sweep(CubeCheck check, unsigned n, const std::vector<double>& grid, double tolerance) {
  if (grid.empty()) throw DomainError("empty value grid");
  const std::size_t size = std::size_t{1} << n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < size; ++i) {
    if (total > (std::uint64_t{1} << 40) / grid.size()) throw DomainError("value grid sweep too large");
    total *= grid.size();
  }
  return parallel_sweep(check, total, tolerance, 0, [&grid, n, size](std::uint64_t t) {
    std::vector<double> v(size);
    for (std::size_t i = 0; i < size; ++i) {
      v[i] = grid[t % grid.size()];
      t /= grid.size();
    }
    return CubeFunction(n, std::move(v));
  });
}

}  // namespace cubecert
