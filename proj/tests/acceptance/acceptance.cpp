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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cubecert/cube.hpp"
#include "cubecert/proof.hpp"
#include "cubecert/scanner.hpp"

using namespace cubecert;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const SubClaim* find_claim(const LemmaCertificate& c, const std::string& name) {
  for (const auto& s : c.claims) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

bool verified(const LemmaCertificate& c, const std::string& name) {
  const SubClaim* s = find_claim(c, name);
  return s && s->status == Status::kVerified;
}

bool clean(const LemmaCertificate& c) { return c.status == Status::kVerified && revalidate(c).empty(); }

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && s > budget_s) o.require(false, "over time budget");
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

double fd5(const std::function<double(double)>& g, double t, double h) {
  return (-g(t + 2 * h) + 8 * g(t + h) - 8 * g(t - h) + g(t - 2 * h)) / (12 * h);
}

}  // namespace

int main() {
  criterion(1, "P coefficient blocks match the golden transcription", 10, [] {
    Outcome o;
    const LemmaCertificate c = verify_P_print();
    o.require(clean(c), "P print certificate not verified");
    o.require(verified(c, "x3_factored_form"), "x^3 product form");
    return o;
  });

  criterion(2, "discriminant factorization is exact", 60, [] {
    Outcome o;
    const LemmaCertificate c = verify_discriminant_factorization();
    o.require(clean(c), "certificate not verified");
    o.require(verified(c, "exact_equality"), "exact equality");
    return o;
  });

  criterion(3, "P special cases b = 0 and y = 0", 0, [] {
    Outcome o;
    const LemmaCertificate c = verify_P_special_cases();
    o.require(clean(c), "certificate not verified");
    o.require(verified(c, "b_zero") && verified(c, "y_zero"), "substitutions");
    return o;
  });

  criterion(4, "Sturm certificates for the degree 10 polynomial and g(y)", 0, [] {
    Outcome o;
    const LemmaCertificate c = verify_T4_positive(default_b_samples(1001));
    o.require(clean(c), "certificate not verified");
    o.require(verified(c, "g4_sign_poly_one_root_on_nonnegative_axis"), "one nonnegative root");
    o.require(verified(c, "g4_sign_poly_root_in_0.22_0.23"), "root in [0.22, 0.23]");
    o.require(verified(c, "no_nonnegative_roots_sweep"), "g(y) root-free on the b samples");
    return o;
  });

  criterion(5, "T3 vertex identity, T1 maximum value, T2 vanishing locus", 0, [] {
    Outcome o;
    const LemmaCertificate t3 = verify_T3(), t1 = verify_T1_negative(), t2 = verify_T2_case();
    o.require(verified(t3, "vertex_identity") && revalidate(t3).empty(), "T3 vertex identity");
    o.require(verified(t1, "maximum_value_printed"),
              "T1(y0) = b^2 (b^2 - 8) / (8 (1 + b^2)) refuted; exact value is b^2 (b^2 - 8)^3 / (8 (1 + b^2))");
    o.require(verified(t2, "vanishing_locus"), "T2 vanishing locus");
    return o;
  });

  criterion(6, "T2 special point at b = 2", 0, [] {
    Outcome o;
    const T2SpecialPoint p = t2_special_point(Rational(2));
    o.require(p.lhs_numerator.is_zero(), "lhs not zero");
    const QuadExt rhs(Rational(2), Rational(8), Rational(-8, 3));  // (24 - 8 sqrt 2) / 3
    o.require(p.rhs_numerator == rhs, "rhs != (24 - 8 sqrt 2)/3");
    o.require(certify_sign(p.rhs_numerator.to_expr()) == Sign::kPositive, "rhs sign");
    o.require(p.x == QuadExt(Rational(2), Rational(0), Rational(2)), "x != 2 sqrt 2");
    const LemmaCertificate c = verify_T2_case({Rational(2)});
    o.require(verified(c, "P_vanishes_b2") && verified(c, "dP_dx_vanishes_b2"), "P, dP/dx at the point");
    return o;
  });

  criterion(7, "Hamming cube theorem and supermartingale steps", 120, [] {
    Outcome o;
    for (CubeCheck chk : {CubeCheck::kTheorem, CubeCheck::kSupermartingale}) {
      const SweepResult g = cube_grid_sweep(chk, 2, {-2, -1, 0, 1, 2});
      o.require(g.functions == 625 && g.min_margin >= -1e-9, "grid");
      for (unsigned n = 1; n <= 4; ++n) {
        const SweepResult s = cube_sweep(chk, n, 100000, 20240101);
        o.require(s.min_margin >= -1e-9, "random n = " + std::to_string(n));
      }
    }
    return o;
  });

  criterion(8, "Beckner and concentration corollaries", 0, [] {
    Outcome o;
    for (CubeCheck chk : {CubeCheck::kBeckner, CubeCheck::kConcentration}) {
      for (unsigned n = 1; n <= 4; ++n) {
        const SweepResult s = cube_sweep(chk, n, 100000, 20240102);
        o.require(s.min_margin >= -1e-9, "n = " + std::to_string(n));
      }
    }
    return o;
  });

  criterion(9, "inequality scans on the default grids", 600, [] {
    Outcome o;
    const ScanResult lemma = scan_main_lemma(default_main_lemma_grid());
    o.require(lemma.passed(), "scan_main_lemma");
    o.require(lemma.equality_points > 0 && lemma.equality_max_abs < 1e-12, "equality at a = b = 0");
    o.require(scan_vector_lemma(8, 1000000, 1).passed(), "scan_vector_lemma");
    o.require(scan_reduced_main(default_reduced_main_grid()).passed(), "scan_reduced_main");
    o.require(scan_E_monotone(default_E_grid()).passed(), "scan_E_monotone");
    o.require(scan_impr2(default_impr2_grid()).passed(), "scan_impr2");
    return o;
  });

  criterion(10, "asymptotics f(x) sqrt(x) -> -b^2 sqrt 2", 0, [] {
    Outcome o;
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> kb(-40, 40), ky(0, 16);
    int done = 0;
    while (done < 20) {
      const long k = kb(rng);
      if (k == 0) continue;
      const Rational b(k, 8), y = b.abs() + Rational(ky(rng), 4);
      const LemmaCertificate c = verify_asymptotics(b, y);
      const SubClaim* pos = find_claim(c, "positive_infinity");
      o.require(pos && pos->status == Status::kVerified, "b = " + b.to_string() + ", y = " + y.to_string());
      if (pos) {
        const double limit = -b.to_double() * b.to_double() * std::sqrt(2.0);
        for (const auto& s : pos->evidence.at("samples")) {
          if (s.at("x").get<double>() == 1e8) {
            o.require(std::abs(s.at("ratio").get<double>() - limit) <= 0.01 * std::abs(limit), "ratio at 1e8");
          }
        }
      }
      ++done;
    }
    return o;
  });

  criterion(11, "M closed form, derivatives, homogeneity", 0, [] {
    Outcome o;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-10, 10), uy(0, 10), uy_inner(0.5, 5), ul(0.1, 10);
    double polar = 0, prod = 0, hom = 0;
    for (int i = 0; i < 10000; ++i) {
      const double x = ux(rng), y = uy(rng);
      const double m = eval_M(x, y), scale = std::pow(std::hypot(x, y), 1.5);
      polar = std::max(polar, std::abs(m - eval_M_polar(x, y)) / scale);
      const double lam = ul(rng);
      hom = std::max(hom, std::abs(eval_M(lam * x, lam * y) - std::pow(lam, 1.5) * m) / (std::pow(lam, 1.5) * scale));
    }
    for (int i = 0; i < 10000; ++i) {
      const double x = ux(rng) / 2, y = uy_inner(rng);
      const double mx = fd5([&](double t) { return eval_M(t, y); }, x, 1e-3);
      const double my = fd5([&](double t) { return eval_M(x, t); }, y, 1e-3);
      prod = std::max(prod, std::abs(mx * my + 9.0 / 8.0 * y));
    }
    o.require(polar <= 1e-12, "polar form");
    o.require(prod <= 1e-8, "M_x M_y + 9y/8 = " + std::to_string(prod));
    o.require(hom <= 1e-10, "homogeneity");
    return o;
  });

  criterion(12, "elimination linkage", 0, [] {
    Outcome o;
    const LemmaCertificate c = verify_elimination_from_main();
    o.require(c.status != Status::kRefuted, "refuted");
    o.require(revalidate(c).empty(), "revalidation");
    o.require(verified(c, "numeric_consistency_1_2_half"), "interval consistency");
    return o;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
