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

#include "cubecert/scanner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "cubecert/cube.hpp"
#include "cubecert/errors.hpp"
#include "cubecert/proof.hpp"

namespace cubecert {

using nlohmann::json;

double Axis::at(std::size_t i) const {
  if (i + 1 >= steps) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::kAbsBLeY: return "abs_b_le_y";
    case Constraint::kAPositive: return "a_positive";
    case Constraint::kXPositive: return "x_positive";
  }
  return "";
}

Constraint constraint_from_string(const std::string& name) {
  for (Constraint c : {Constraint::kAbsBLeY, Constraint::kAPositive, Constraint::kXPositive}) {
    if (name == to_string(c)) return c;
  }
  throw ConfigError("unknown constraint '" + name + "'");
}

const Axis& GridSpec::axis(const std::string& name) const {
  for (const auto& a : axes) {
    if (a.name == name) return a;
  }
  throw ConfigError("grid has no axis '" + name + "'");
}

namespace {

void check_axis(const Axis& a) {
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) throw ConfigError("axis " + a.name + ": range must be finite");
  if (a.lo > a.hi) throw ConfigError("axis " + a.name + ": lo > hi");
  if (a.steps < 2) throw ConfigError("axis " + a.name + ": step count must be >= 2");
}

}  // namespace

void GridSpec::set_axis(const std::string& name, double lo, double hi, std::size_t steps) {
  for (auto& a : axes) {
    if (a.name == name) {
      Axis next{name, lo, hi, steps};
      check_axis(next);
      a = next;
      return;
    }
  }
  throw ConfigError("grid has no axis '" + name + "'");
}

void GridSpec::validate(const std::vector<std::string>& expected) const {
  if (axes.size() != expected.size()) throw ConfigError("grid needs axes " + json(expected).dump());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i].name != expected[i]) throw ConfigError("grid needs axes " + json(expected).dump());
    check_axis(axes[i]);
  }
  if (!(tolerance >= 0) || !(tight_threshold >= 0)) throw ConfigError("tolerances must be >= 0");
  if (t_steps < 2) throw ConfigError("t_steps must be >= 2");
}

json GridSpec::to_json() const {
  json ax = json::array();
  for (const auto& a : axes) ax.push_back({{"name", a.name}, {"lo", a.lo}, {"hi", a.hi}, {"steps", a.steps}});
  json cons = json::array();
  for (auto c : constraints) cons.push_back(to_string(c));
  return {{"axes", ax},         {"constraints", cons}, {"tolerance", tolerance}, {"tight_threshold", tight_threshold},
          {"refine", refine},   {"max_refine", max_refine}, {"random_refine", random_refine},
          {"seed", seed},       {"t_steps", t_steps}};
}

json ScanResult::to_json() const {
  json j = {{"scan", scan},
            {"points_tested", points_tested},
            {"refined_points", refined_points},
            {"min_margin", min_margin},
            {"witness", witness},
            {"violations", violations},
            {"tight_points", tight_points},
            {"clamped_radicands", clamped_radicands},
            {"tolerance", tolerance},
            {"seconds", seconds}};
  if (equality_points > 0) {
    j["equality_points"] = equality_points;
    j["equality_max_abs"] = equality_max_abs;
  }
  return j;
}

// ------------------------------------------------------------ margins

namespace {

struct Counters {
  std::uint64_t clamped = 0;
};

double clamped_sqrt(double v, Counters* c) {
  if (v < 0) {
    if (v < -1e-15) throw DomainError("negative radicand " + std::to_string(v));
    if (c) ++c->clamped;
    return 0.0;
  }
  return std::sqrt(v);
}

double main_margin(double x, double y, double a, double b, Counters* c) {
  const double plus = eval_M(x + a, clamped_sqrt(a * a + (y + b) * (y + b), c));
  const double minus = eval_M(x - a, clamped_sqrt(a * a + (y - b) * (y - b), c));
  return eval_M(x, y) - (plus + minus) / 2;
}

double E_at(double x, double y, double a, double b, double t, Counters* c) {
  const double at = a * t, bt = b * t;
  return eval_M(x + at, clamped_sqrt(at * at + (y + bt) * (y + bt), c)) +
         eval_M(x - at, clamped_sqrt(at * at + (y - bt) * (y - bt), c));
}

double impr2(double x, double y) {
  if (!(x > 0)) throw DomainError("impr2 needs x > 0");
  return 0.375 * y * y / std::sqrt(x) - (x * std::sqrt(x) - eval_M(x, y));
}

}  // namespace

double main_lemma_margin(double x, double y, double a, double b) { return main_margin(x, y, a, b, nullptr); }

double vector_lemma_margin(double x, double a, const std::vector<double>& y, const std::vector<double>& b) {
  if (y.size() != b.size() || y.empty()) throw DomainError("y and b must have the same positive length");
  double ny = 0, np = 0, nm = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    ny += y[i] * y[i];
    np += (y[i] + b[i]) * (y[i] + b[i]);
    nm += (y[i] - b[i]) * (y[i] - b[i]);
  }
  return eval_M(x, std::sqrt(ny)) -
         (eval_M(x + a, std::sqrt(a * a + np)) + eval_M(x - a, std::sqrt(a * a + nm))) / 2;
}

double reduced_main_margin(double x, double y, double b) {
  if (std::abs(b) > y) throw DomainError("reduced inequality needs |b| <= y");
  const auto s = reduced_main_sides(x, y, b);
  return s.rhs - s.lhs;
}

double E_value(double x, double y, double a, double b, double t) { return E_at(x, y, a, b, t, nullptr); }

double E_step_margin(double x, double y, double a, double b, double t0, double t1) {
  return E_value(x, y, a, b, t0) - E_value(x, y, a, b, t1);
}

double impr2_margin(double x, double y) { return impr2(x, y); }

// ------------------------------------------------------------ grids

GridSpec default_main_lemma_grid() {
  GridSpec g;
  g.axes = {{"x", -10, 10, 50}, {"y", 0, 10, 50}, {"a", -5, 5, 50}, {"b", -5, 5, 50}};
  return g;
}

GridSpec default_reduced_main_grid() {
  GridSpec g;
  g.axes = {{"x", -20, 20, 201}, {"y", 0, 10, 101}, {"b", -10, 10, 101}};
  g.constraints = {Constraint::kAbsBLeY};
  return g;
}

GridSpec default_E_grid() {
  GridSpec g;
  g.axes = {{"x", -10, 10, 21}, {"y", 0, 10, 11}, {"a", 0.25, 5, 20}, {"b", -5, 5, 21}};
  g.constraints = {Constraint::kAPositive};
  g.t_steps = 101;
  return g;
}

GridSpec default_impr2_grid() {
  GridSpec g;
  g.axes = {{"x", 0.01, 10, 1000}, {"y", 0, 10, 1000}};
  g.constraints = {Constraint::kXPositive};
  return g;
}

// ------------------------------------------------------------ engine

namespace {

struct Eval {
  double margin;
  // Extra witness coordinate (t-step index for E), NaN if unused.
  double aux = std::numeric_limits<double>::quiet_NaN();
};

struct Problem {
  std::string name;
  std::vector<std::string> axes;
  std::function<Eval(const double*, Counters*)> eval;
  std::function<json(const double*, const Eval&)> witness;
};

struct Tight {
  double abs_margin;
  std::uint64_t index;
  bool operator<(const Tight& o) const {
    return abs_margin != o.abs_margin ? abs_margin < o.abs_margin : index < o.index;
  }
};

struct Partial {
  std::uint64_t tested = 0, violations = 0, tight = 0, clamped = 0;
  bool have_min = false;
  double min_margin = 0;
  std::uint64_t min_index = 0;
  std::vector<Tight> tightest;
};

int axis_index(const GridSpec& spec, const char* name) {
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    if (spec.axes[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

struct Admission {
  int x = -1, y = -1, a = -1, b = -1;
  std::vector<Constraint> constraints;

  Admission(const GridSpec& spec)
      : x(axis_index(spec, "x")),
        y(axis_index(spec, "y")),
        a(axis_index(spec, "a")),
        b(axis_index(spec, "b")),
        constraints(spec.constraints) {
    for (auto c : constraints) {
      if ((c == Constraint::kAbsBLeY && (y < 0 || b < 0)) || (c == Constraint::kAPositive && a < 0) ||
          (c == Constraint::kXPositive && x < 0)) {
        throw ConfigError(std::string("constraint ") + to_string(c) + " refers to a missing axis");
      }
    }
  }

  bool operator()(const double* p) const {
    if (y >= 0 && p[y] < 0) return false;
    for (auto c : constraints) {
      switch (c) {
        case Constraint::kAbsBLeY:
          if (std::abs(p[b]) > p[y]) return false;
          break;
        case Constraint::kAPositive:
          if (!(p[a] > 0)) return false;
          break;
        case Constraint::kXPositive:
          if (!(p[x] > 0)) return false;
          break;
      }
    }
    return true;
  }
};

void decode(const GridSpec& spec, std::uint64_t index, double* p) {
  for (std::size_t k = spec.axes.size(); k-- > 0;) {
    const auto& ax = spec.axes[k];
    p[k] = ax.at(index % ax.steps);
    index /= ax.steps;
  }
}

void keep_tightest(std::vector<Tight>& v, std::size_t cap) {
  if (v.size() <= cap) return;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cap), v.end());
  v.resize(cap);
}

Partial scan_chunk(const GridSpec& spec, const Problem& prob, const Admission& admit, std::uint64_t begin,
                   std::uint64_t end) {
  Partial r;
  Counters counters;
  std::vector<double> p(spec.axes.size());
  const std::size_t cap = std::max<std::size_t>(spec.max_refine, 1);
  for (std::uint64_t i = begin; i < end; ++i) {
    decode(spec, i, p.data());
    if (!admit(p.data())) continue;
    const double m = prob.eval(p.data(), &counters).margin;
    if (!std::isfinite(m)) throw DomainError(prob.name + ": non-finite margin");
    ++r.tested;
    if (m < -spec.tolerance) ++r.violations;
    if (!r.have_min || m < r.min_margin) {
      r.have_min = true;
      r.min_margin = m;
      r.min_index = i;
    }
    if (std::abs(m) < spec.tight_threshold) {
      ++r.tight;
      r.tightest.push_back({std::abs(m), i});
      if (r.tightest.size() > 4 * cap) keep_tightest(r.tightest, cap);
    }
  }
  keep_tightest(r.tightest, cap);
  r.clamped = counters.clamped;
  return r;
}

ScanResult run_grid(const GridSpec& spec, const Problem& prob) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate(prob.axes);
  const Admission admit(spec);
  std::uint64_t total = 1;
  for (const auto& a : spec.axes) total *= a.steps;

  unsigned threads = spec.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Partial> parts(threads);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        parts[t] = scan_chunk(spec, prob, admit, total * t / threads, total * (t + 1) / threads);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ScanResult res;
  res.scan = prob.name;
  res.tolerance = spec.tolerance;
  bool have_min = false;
  std::uint64_t min_index = 0;
  std::vector<Tight> tightest;
  for (const auto& part : parts) {
    res.points_tested += part.tested;
    res.violations += part.violations;
    res.tight_points += part.tight;
    res.clamped_radicands += part.clamped;
    if (part.have_min && (!have_min || part.min_margin < res.min_margin ||
                          (part.min_margin == res.min_margin && part.min_index < min_index))) {
      have_min = true;
      res.min_margin = part.min_margin;
      min_index = part.min_index;
    }
    tightest.insert(tightest.end(), part.tightest.begin(), part.tightest.end());
  }
  if (!have_min) throw ConfigError(prob.name + ": no grid point satisfies the constraints");

  const std::size_t d = spec.axes.size();
  std::vector<double> best(d);
  decode(spec, min_index, best.data());
  Counters counters;
  Eval best_eval = prob.eval(best.data(), &counters);

  if (spec.refine && spec.max_refine > 0) {
    keep_tightest(tightest, spec.max_refine);
    std::sort(tightest.begin(), tightest.end());
    std::vector<double> center(d), p(d);
    std::size_t sub_total = 1;
    for (std::size_t k = 0; k < d; ++k) sub_total *= 11;
    auto consider = [&](const double* q) {
      if (!admit(q)) return;
      const Eval e = prob.eval(q, &counters);
      if (!std::isfinite(e.margin)) throw DomainError(prob.name + ": non-finite margin");
      ++res.refined_points;
      if (e.margin < -spec.tolerance) ++res.violations;
      if (std::abs(e.margin) < spec.tight_threshold) ++res.tight_points;
      if (e.margin < res.min_margin) {
        res.min_margin = e.margin;
        best.assign(q, q + d);
        best_eval = e;
      }
    };
    for (const auto& tp : tightest) {
      decode(spec, tp.index, center.data());
      for (std::size_t s = 0; s < sub_total; ++s) {
        std::size_t rest = s;
        bool inside = true;
        for (std::size_t k = 0; k < d; ++k) {
          const int offset = static_cast<int>(rest % 11) - 5;
          rest /= 11;
          const auto& ax = spec.axes[k];
          p[k] = center[k] + offset * ax.spacing() / 10;
          if (p[k] < ax.lo || p[k] > ax.hi) inside = false;
        }
        if (inside) consider(p.data());
      }
      std::mt19937_64 rng(spec.seed ^ (tp.index * 0x9E3779B97F4A7C15ULL));
      std::uniform_real_distribution<double> unit(-0.5, 0.5);
      for (std::size_t s = 0; s < spec.random_refine; ++s) {
        for (std::size_t k = 0; k < d; ++k) {
          const auto& ax = spec.axes[k];
          p[k] = std::clamp(center[k] + unit(rng) * ax.spacing(), ax.lo, ax.hi);
        }
        consider(p.data());
      }
    }
  }
  res.clamped_radicands += counters.clamped;
  res.witness = prob.witness(best.data(), best_eval);
  res.witness["margin"] = res.min_margin;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

ScanResult scan_main_lemma(const GridSpec& spec) {
  Problem prob{"scan-lemma",
               {"x", "y", "a", "b"},
               [](const double* p, Counters* c) { return Eval{main_margin(p[0], p[1], p[2], p[3], c)}; },
               [](const double* p, const Eval&) {
                 return json{{"kind", "lemma_point"}, {"x", p[0]}, {"y", p[1]}, {"a", p[2]}, {"b", p[3]}};
               }};
  ScanResult res = run_grid(spec, prob);
  // a = b = 0 is an equality family the grid need not contain.
  const Axis& xa = spec.axes[0];
  const Axis& ya = spec.axes[1];
  for (std::size_t i = 0; i < xa.steps; ++i) {
    for (std::size_t j = 0; j < ya.steps; ++j) {
      const double y = ya.at(j);
      if (y < 0) continue;
      const double m = main_lemma_margin(xa.at(i), y, 0.0, 0.0);
      ++res.equality_points;
      res.equality_max_abs = std::max(res.equality_max_abs, std::abs(m));
    }
  }
  return res;
}

ScanResult scan_reduced_main(const GridSpec& spec) {
  Problem prob{"scan-main",
               {"x", "y", "b"},
               [](const double* p, Counters*) {
                 const auto s = reduced_main_sides(p[0], p[1], p[2]);
                 return Eval{s.rhs - s.lhs};
               },
               [](const double* p, const Eval&) {
                 return json{{"kind", "reduced_main"}, {"x", p[0]}, {"y", p[1]}, {"b", p[2]}};
               }};
  bool constrained = false;
  for (auto c : spec.constraints) constrained = constrained || c == Constraint::kAbsBLeY;
  if (!constrained) throw ConfigError("scan-main requires the abs_b_le_y constraint");
  return run_grid(spec, prob);
}

ScanResult scan_E_monotone(const GridSpec& spec) {
  const std::size_t steps = spec.t_steps;
  auto t_at = [steps](std::size_t i) { return i + 1 >= steps ? 1.0 : static_cast<double>(i) / (steps - 1); };
  Problem prob{"scan-e",
               {"x", "y", "a", "b"},
               [=](const double* p, Counters* c) {
                 double prev = E_at(p[0], p[1], p[2], p[3], 0.0, c);
                 Eval best{std::numeric_limits<double>::infinity(), 0};
                 for (std::size_t i = 1; i < steps; ++i) {
                   const double next = E_at(p[0], p[1], p[2], p[3], t_at(i), c);
                   if (prev - next < best.margin) best = {prev - next, static_cast<double>(i - 1)};
                   prev = next;
                 }
                 return best;
               },
               [=](const double* p, const Eval& e) {
                 const auto i = static_cast<std::size_t>(e.aux);
                 return json{{"kind", "e_step"}, {"x", p[0]},       {"y", p[1]},          {"a", p[2]},
                             {"b", p[3]},        {"t0", t_at(i)}, {"t1", t_at(i + 1)}};
               }};
  bool constrained = false;
  for (auto c : spec.constraints) constrained = constrained || c == Constraint::kAPositive;
  if (!constrained) throw ConfigError("scan-e requires the a_positive constraint");
  return run_grid(spec, prob);
}

ScanResult scan_impr2(const GridSpec& spec) {
  Problem prob{"scan-impr2",
               {"x", "y"},
               [](const double* p, Counters*) { return Eval{impr2(p[0], p[1])}; },
               [](const double* p, const Eval&) { return json{{"kind", "impr2"}, {"x", p[0]}, {"y", p[1]}}; }};
  bool constrained = false;
  for (auto c : spec.constraints) constrained = constrained || c == Constraint::kXPositive;
  if (!constrained) throw ConfigError("scan-impr2 requires the x_positive constraint");
  return run_grid(spec, prob);
}

// ------------------------------------------------------------ vector lemma

namespace {

struct VectorPoint {
  double x, a;
  std::vector<double> y, b;
};

VectorPoint vector_point(unsigned N, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(seed ^ (trial * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  VectorPoint p;
  p.x = u(rng);
  p.a = u(rng);
  p.y.resize(N);
  p.b.resize(N);
  for (auto& v : p.y) v = u(rng);
  for (auto& v : p.b) v = u(rng);
  return p;
}

}  // namespace

ScanResult scan_vector_lemma(unsigned N, std::uint64_t trials, std::uint64_t seed, double tolerance,
                             unsigned threads) {
  if (N < 1 || N > 16) throw DomainError("vector lemma dimension must be in [1, 16]");
  if (trials == 0) throw ConfigError("scan-vector needs at least one trial");
  const auto start = std::chrono::steady_clock::now();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
  struct Part {
    std::uint64_t violations = 0, tight = 0;
    double min = std::numeric_limits<double>::infinity();
    std::uint64_t arg = 0;
  };
  std::vector<Part> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Part& part = parts[t];
      for (std::uint64_t i = trials * t / threads; i < trials * (t + 1) / threads; ++i) {
        const VectorPoint p = vector_point(N, seed, i);
        const double m = vector_lemma_margin(p.x, p.a, p.y, p.b);
        if (m < -tolerance) ++part.violations;
        if (std::abs(m) < 1e-7) ++part.tight;
        if (m < part.min) {
          part.min = m;
          part.arg = i;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  ScanResult res;
  res.scan = "scan-vector";
  res.tolerance = tolerance;
  res.points_tested = trials;
  res.min_margin = std::numeric_limits<double>::infinity();
  std::uint64_t arg = 0;
  for (const auto& part : parts) {
    res.violations += part.violations;
    res.tight_points += part.tight;
    if (part.min < res.min_margin || (part.min == res.min_margin && part.arg < arg)) {
      res.min_margin = part.min;
      arg = part.arg;
    }
  }
  const VectorPoint w = vector_point(N, seed, arg);
  res.witness = {{"kind", "vector_lemma"}, {"x", w.x}, {"a", w.a}, {"y", w.y}, {"b", w.b}, {"margin", res.min_margin}};
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

double replay_scan_witness(const json& w) {
  try {
    const std::string kind = w.at("kind");
    if (kind == "lemma_point") return main_lemma_margin(w.at("x"), w.at("y"), w.at("a"), w.at("b"));
    if (kind == "vector_lemma") {
      return vector_lemma_margin(w.at("x"), w.at("a"), w.at("y").get<std::vector<double>>(),
                                 w.at("b").get<std::vector<double>>());
    }
    if (kind == "reduced_main") return reduced_main_margin(w.at("x"), w.at("y"), w.at("b"));
    if (kind == "e_step") return E_step_margin(w.at("x"), w.at("y"), w.at("a"), w.at("b"), w.at("t0"), w.at("t1"));
    if (kind == "impr2") return impr2_margin(w.at("x"), w.at("y"));
    throw ParseError("unknown scan witness kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed scan witness: ") + e.what());
  }
}

}  // namespace cubecert
