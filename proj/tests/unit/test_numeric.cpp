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
#include <mpfr.h>

#include <random>

#include "cubecert/errors.hpp"
#include "cubecert/numeric.hpp"

using namespace cubecert;

TEST_CASE("rational arithmetic examples") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK((Rational(2, 4) + Rational(0)).to_string() == "1/2");
  CHECK(Rational(-59) < Rational(12));
  CHECK(Rational(3, -6).denominator() == ExactInt(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK(Rational::from_string("0.25") == Rational(1, 4));
  CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
}

TEST_CASE("exact integers do not overflow") {
  const ExactInt big = ExactInt(16777216).pow(5);
  CHECK(big.to_string() == "1329227995784915872903807060280344576");
  CHECK((big + ExactInt(123)) - ExactInt(123) == big);
  CHECK(ExactInt(10).isqrt() == ExactInt(3));
  CHECK(ExactInt(144).is_perfect_square());
}

TEST_CASE("field axioms on random fractions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(((a < b) == (a.to_double() < b.to_double()) || a.to_double() == b.to_double()));
  }
}

TEST_CASE("interval_sqrt examples") {
  for (unsigned p : {1U, 8U, 30U, 100U}) {
    const Interval r = interval_sqrt(Interval(Rational(4)), p);
    CHECK(r.contains(Rational(2)));
    CHECK(r.width() <= Rational(1, 2).pow(static_cast<int>(p)));
  }
  const Interval s2 = interval_sqrt(Interval(Rational(2)), 20);
  CHECK(s2.lo() >= Rational::from_string("1.414213"));
  CHECK(s2.hi() <= Rational::from_string("1.414214"));
  const Interval z = interval_sqrt(Interval(Rational(0)), 10);
  CHECK(z.lo() == Rational(0));
  CHECK(z.hi() == Rational(0));
  CHECK_THROWS_AS(interval_sqrt(Interval(Rational(-1, 1000), Rational(1)), 10), DomainError);
}

TEST_CASE("interval_sqrt encloses random inputs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(0, 1000000), den(1, 10000);
  std::uniform_int_distribution<unsigned> prec(4, 200);
  for (int i = 0; i < 500; ++i) {
    const Rational q(num(rng), den(rng));
    const unsigned p = prec(rng);
    const Interval r = interval_sqrt(Interval(q), p);
    CHECK(r.lo() * r.lo() <= q);
    CHECK(q <= r.hi() * r.hi());
    const Rational m = r.midpoint();
    // |m^2 - q| <= (hi^2 - lo^2) = width * (hi + lo)
    CHECK((m * m - q).abs() <= r.width() * (r.hi() + r.lo()));
  }
}

TEST_CASE("interval arithmetic encloses exact results") {
  const Interval a(Rational(-1), Rational(2)), b(Rational(3), Rational(4));
  const Interval prod = a * b;
  CHECK(prod.lo() == Rational(-4));
  CHECK(prod.hi() == Rational(8));
  CHECK_THROWS_AS(b / a, DivisionByZero);
  CHECK(!a.certain_sign().has_value());
  CHECK(*b.certain_sign() == 1);
}

TEST_CASE("certify_sign examples") {
  const Expr two(2);
  CHECK(certify_sign(Expr(2) * sqrt(two) - Expr(3)) == Sign::kNegative);
  CHECK(certify_sign(sqrt(two) * sqrt(two) - two) == Sign::kZero);
  const Expr b(2);
  CHECK(certify_sign(b * (Expr(2) * sqrt(b * b - Expr(2)) - b * b * b + b)) == Sign::kNegative);
  CHECK(certify_sign(sqrt(Expr(8)) - Expr(2) * sqrt(two)) == Sign::kZero);
  CHECK(certify_sign(Expr(Rational(1, 3)) - Expr(Rational(1, 3))) == Sign::kZero);
  CHECK_THROWS_AS(certify_sign(sqrt(Expr(-1))), DomainError);
}

namespace {

struct Mpfr {
  mpfr_t v;
  Mpfr() { mpfr_init2(v, 200); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

// Random tree together with its 200-bit value. Divisors and radicands are
// kept positive by construction.
Expr random_tree(std::mt19937_64& rng, int depth, mpfr_t out) {
  std::uniform_int_distribution<int> op(0, depth <= 0 ? 0 : 5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  switch (op(rng)) {
    case 0: {
      const Rational q(num(rng), den(rng));
      mpfr_set_si(out, q.numerator().to_long(), MPFR_RNDN);
      mpfr_div_si(out, out, q.denominator().to_long(), MPFR_RNDN);
      return Expr(q);
    }
    case 1:
    case 2:
    case 3: {
      Mpfr a, b;
      const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      const Expr ea = random_tree(rng, depth - 1, a.v), eb = random_tree(rng, depth - 1, b.v);
      if (kind == 0) {
        mpfr_add(out, a.v, b.v, MPFR_RNDN);
        return ea + eb;
      }
      if (kind == 1) {
        mpfr_sub(out, a.v, b.v, MPFR_RNDN);
        return ea - eb;
      }
      mpfr_mul(out, a.v, b.v, MPFR_RNDN);
      return ea * eb;
    }
    case 4: {
      // a / (b^2 + c), c > 0
      Mpfr a, b, d;
      const Expr ea = random_tree(rng, depth - 1, a.v), eb = random_tree(rng, depth - 1, b.v);
      const long c = std::uniform_int_distribution<long>(1, 5)(rng);
      mpfr_sqr(d.v, b.v, MPFR_RNDN);
      mpfr_add_si(d.v, d.v, c, MPFR_RNDN);
      mpfr_div(out, a.v, d.v, MPFR_RNDN);
      return ea / (eb * eb + Expr(c));
    }
    default: {
      // sqrt(a^2 + c), c >= 0
      Mpfr a, d;
      const Expr ea = random_tree(rng, depth - 1, a.v);
      const long c = std::uniform_int_distribution<long>(0, 5)(rng);
      mpfr_sqr(d.v, a.v, MPFR_RNDN);
      mpfr_add_si(d.v, d.v, c, MPFR_RNDN);
      mpfr_sqrt(out, d.v, MPFR_RNDN);
      return sqrt(ea * ea + Expr(c));
    }
  }
}

}  // namespace

TEST_CASE("certify_sign agrees with a 200-bit oracle on random trees") {
  std::mt19937_64 rng(2024);
  int decided = 0, compared = 0;
  for (int i = 0; i < 10000; ++i) {
    Mpfr v;
    const Expr e = random_tree(rng, 4, v.v);
    const Sign s = certify_sign(e);
    if (s == Sign::kUndecided) continue;
    ++decided;
    // Values within 2^-150 of zero are beyond what the oracle resolves.
    Mpfr mag;
    mpfr_abs(mag.v, v.v, MPFR_RNDN);
    if (s == Sign::kZero) {
      CHECK(mpfr_cmp_d(mag.v, 1e-45) < 0);
      continue;
    }
    if (mpfr_cmp_d(mag.v, 1e-45) < 0) continue;
    ++compared;
    const int oracle = mpfr_sgn(v.v);
    CHECK((s == Sign::kPositive ? 1 : -1) == oracle);
  }
  CHECK(decided > 9000);
  CHECK(compared > 8000);
}
