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

#include <doctest.h>

#include <cmath>
#include <random>

#include "cubecert/cube.hpp"
#include "cubecert/errors.hpp"
#include "cubecert/scanner.hpp"

using namespace cubecert;

namespace {

GridSpec small(GridSpec g, std::size_t steps) {
  for (auto& a : g.axes) a.steps = steps;
  return g;
}

}  // namespace

TEST_CASE("lemma margin examples") {
  CHECK(main_lemma_margin(1, 1, 0, 0) == doctest::Approx(0.0));
  CHECK(std::abs(main_lemma_margin(3.5, 2.25, 0, 0)) <= 1e-15);
  // x = 0, y = 1, a = 1, b = 0: both sides of the average are M(+-1, sqrt 2).
  const double avg = (eval_M(1, std::sqrt(2.0)) + eval_M(-1, std::sqrt(2.0))) / 2;
  CHECK(main_lemma_margin(0, 1, 1, 0) == doctest::Approx(eval_M(0, 1) - avg));
  CHECK(main_lemma_margin(0, 1, 1, 0) > 0);
}

TEST_CASE("lemma margin homogeneity") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> u(-5, 5), v(0, 5), l(0.1, 10);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng), y = v(rng), a = u(rng), b = u(rng), lam = l(rng);
    const double m1 = main_lemma_margin(lam * x, lam * y, lam * a, lam * b);
    const double m2 = std::pow(lam, 1.5) * main_lemma_margin(x, y, a, b);
    const double scale = std::pow(lam * (std::abs(x) + y + std::abs(a) + std::abs(b)), 1.5);
    CHECK(std::abs(m1 - m2) <= 1e-11 * scale);
  }
}

TEST_CASE("vector lemma reduces to the scalar one for N = 1") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> u(-5, 5), v(0, 5);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng), y = v(rng), a = u(rng), b = u(rng);
    CHECK(vector_lemma_margin(x, a, {y}, {b}) == doctest::Approx(main_lemma_margin(x, y, a, b)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(vector_lemma_margin(0, 0, {1, 2}, {1}), DomainError);
}

TEST_CASE("reduced main inequality") {
  // Not an equality point: at b = 0 the two sides differ by about 0.976.
  const double m = reduced_main_margin(0, 1, 0);
  CHECK(m == doctest::Approx(0.976).epsilon(1e-3));
  CHECK(m > 0);
  CHECK_THROWS_AS(reduced_main_margin(0, 1, 2), DomainError);
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> u(-20, 20), v(0.01, 10), w(-1, 1);
  for (int i = 0; i < 20000; ++i) {
    const double x = u(rng), y = v(rng), b = y * w(rng);
    CHECK(reduced_main_margin(x, y, b) >= -1e-9);
  }
}

TEST_CASE("E is monotone along the segment") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-5, 5), v(0, 5), pa(0.1, 5);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng), y = v(rng), a = pa(rng), b = u(rng);
    CHECK(E_value(x, y, a, b, 0) == doctest::Approx(2 * eval_M(x, y)).epsilon(1e-14));
    double prev = E_value(x, y, a, b, 0);
    for (int k = 1; k <= 1000; ++k) {
      const double cur = E_value(x, y, a, b, k / 1000.0);
      CHECK(prev - cur >= -1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("impr2") {
  CHECK(impr2_margin(1, 0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(impr2_margin(0, 1), DomainError);
  CHECK_THROWS_AS(impr2_margin(-1, 1), DomainError);
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> px(0.01, 10), py(0, 10), l(0.1, 10);
  for (int i = 0; i < 2000; ++i) {
    const double x = px(rng), y = py(rng), lam = l(rng);
    const double m = impr2_margin(x, y);
    CHECK(m >= -1e-9);
    CHECK(impr2_margin(lam * x, lam * y) ==
          doctest::Approx(std::pow(lam, 1.5) * m).epsilon(1e-9).scale(std::pow(lam * (x + y), 1.5)));
  }
}

TEST_CASE("main lemma scan, small grid") {
  const ScanResult r = scan_main_lemma(small(default_main_lemma_grid(), 12));
  CHECK(r.passed());
  CHECK(r.points_tested == 12U * 12 * 12 * 12);
  CHECK(r.min_margin >= -1e-9);
  CHECK(r.equality_points > 0);
  CHECK(r.equality_max_abs < 1e-12);
  CHECK(std::abs(replay_scan_witness(r.witness) - r.min_margin) == 0.0);
  const ScanResult again = scan_main_lemma(small(default_main_lemma_grid(), 12));
  CHECK(again.min_margin == r.min_margin);
  CHECK(again.witness == r.witness);
}

TEST_CASE("threads do not change results") {
  GridSpec g1 = small(default_main_lemma_grid(), 10), g3 = g1;
  g1.threads = 1;
  g3.threads = 3;
  const ScanResult a = scan_main_lemma(g1), b = scan_main_lemma(g3);
  CHECK(a.min_margin == b.min_margin);
  CHECK(a.witness == b.witness);
  CHECK(a.tight_points == b.tight_points);
  CHECK(a.refined_points == b.refined_points);
}

TEST_CASE("other scans, small grids") {
  GridSpec e = small(default_E_grid(), 6);
  e.t_steps = 21;
  for (const ScanResult& r : {scan_reduced_main(small(default_reduced_main_grid(), 21)), scan_E_monotone(e),
                              scan_impr2(small(default_impr2_grid(), 50))}) {
    CHECK_MESSAGE(r.passed(), r.scan);
    CHECK(r.min_margin >= -1e-9);
    CHECK(replay_scan_witness(r.witness) == r.min_margin);
  }
  const ScanResult v = scan_vector_lemma(4, 20000, 5);
  CHECK(v.passed());
  CHECK(v.points_tested == 20000);
  CHECK(replay_scan_witness(v.witness) == v.min_margin);
  CHECK_THROWS_AS(scan_vector_lemma(0, 10, 1), DomainError);
  CHECK_THROWS_AS(scan_vector_lemma(17, 10, 1), DomainError);
}

TEST_CASE("grid configuration errors") {
  GridSpec g = default_main_lemma_grid();
  CHECK_THROWS_AS(g.set_axis("z", 0, 1, 3), ConfigError);
  CHECK_THROWS_AS(g.set_axis("x", 1, 0, 3), ConfigError);
  CHECK_THROWS_AS(g.set_axis("x", 0, 1, 1), ConfigError);
  CHECK_THROWS_AS(g.set_axis("x", 0, INFINITY, 3), ConfigError);
  CHECK_THROWS_AS(constraint_from_string("b_small"), ConfigError);
  CHECK(constraint_from_string("abs_b_le_y") == Constraint::kAbsBLeY);
  GridSpec m = default_reduced_main_grid();
  m.constraints.clear();
  CHECK_THROWS_AS(scan_reduced_main(m), ConfigError);
  GridSpec i = default_impr2_grid();
  i.constraints.clear();
  CHECK_THROWS_AS(scan_impr2(i), ConfigError);
  GridSpec wrong = default_impr2_grid();
  CHECK_THROWS_AS(scan_main_lemma(wrong), ConfigError);
  CHECK(default_main_lemma_grid().axis("y").at(49) == 10.0);
}

TEST_CASE("replay rejects malformed witnesses") {
  CHECK_THROWS(replay_scan_witness(nlohmann::json{{"kind", "nonsense"}}));
  CHECK_THROWS(replay_scan_witness(nlohmann::json{{"kind", "lemma_point"}, {"x", 1}}));
}
