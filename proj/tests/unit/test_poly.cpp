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

#include <random>

#include "cubecert/errors.hpp"
#include "cubecert/poly.hpp"
#include "cubecert/proof.hpp"

using namespace cubecert;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

UniPoly U(std::vector<long> c, const char* var = "y") {
  std::vector<Rational> r(c.begin(), c.end());
  return UniPoly(var, r);
}

MultiPoly random_poly(std::mt19937_64& rng, unsigned max_degree) {
  static const char* vars[] = {"x", "y", "b"};
  std::uniform_int_distribution<int> terms(0, 6), deg(0, static_cast<int>(max_degree)), var(0, 2);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  MultiPoly p;
  for (int t = terms(rng); t > 0; --t) {
    MultiPoly m(Rational(num(rng), den(rng)));
    for (int d = deg(rng); d > 0; --d) m *= MultiPoly::variable(vars[var(rng)]);
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
  CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
  CHECK(P("(1+b^2)^2") == P("1 + 2*b^2 + b^4"));
  CHECK(P("(y^2+2)").pow(4) * P("-16*(y^2+1)") == printed::p_at_b0());
  CHECK(P("x - x").is_zero());
  CHECK(P("x^2/2").terms().begin()->second == Rational(1, 2));
}

TEST_CASE("canonical text round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = random_poly(rng, 4);
    CHECK(parse_poly(p.to_string()) == p);
  }
  CHECK(P("y*x + 3").to_string() == "1*x^1*y^1 + 3");
  CHECK(MultiPoly().to_string() == "0");
  CHECK_THROWS_AS(parse_poly("x +* y"), ParseError);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const MultiPoly p = random_poly(rng, 4), q = random_poly(rng, 4), r = random_poly(rng, 4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK((p - q) + q == p);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const MultiPoly p = random_poly(rng, 3), q = random_poly(rng, 3), v = random_poly(rng, 2);
    CHECK((p * q).substitute("y", v) == p.substitute("y", v) * q.substitute("y", v));
    CHECK((p + q).substitute("x", Rational(3, 7)) == p.substitute("x", Rational(3, 7)) + q.substitute("x", Rational(3, 7)));
  }
}

TEST_CASE("substitute examples") {
  CHECK(P("x^2+y^2").substitute("y", Rational(0)) == P("x^2"));
  const MultiPoly Pfull = build_P().reassemble();
  CHECK(Pfull.substitute("b", Rational(0)) == printed::p_at_b0());
  CHECK(Pfull.substitute("y", Rational(0)) == printed::p_at_y0());
  CHECK(P("x^4 + y").substitute_square("x", "X") == P("X^2 + y"));
  CHECK_THROWS_AS(P("x^3").substitute_square("x", "X"), DomainError);
}

TEST_CASE("radical reduction") {
  auto rel = std::make_shared<RadicalPoly::Relations>();
  rel->a_square = P("(x+1)^2 + 1 + (y+b)^2");
  rel->b_square = P("(x-1)^2 + 1 + (y-b)^2");
  const RadicalPoly aa = RadicalPoly::reduce(P("A*A"), rel);
  CHECK(aa.one() == rel->a_square);
  CHECK(aa.a().is_zero());
  const RadicalPoly sq = RadicalPoly::reduce(P("(A+B)^2"), rel);
  CHECK(sq.one() == rel->a_square + rel->b_square);
  CHECK(sq.ab() == P("2"));
  const EliminationSystem sys = EliminationSystem::printed();
  const MultiPoly main1 = sys.c_a * P("A") + sys.c_b * P("B") + sys.c_ab * P("A*B") + sys.l;
  const RadicalPoly r = RadicalPoly::reduce(main1, sys.relations());
  CHECK(r.to_multi() == main1);
  CHECK(RadicalPoly::reduce(r.to_multi(), sys.relations()) == r);
  CHECK(radical_reduce(r) == r);
}

TEST_CASE("radical ring laws") {
  std::mt19937_64 rng(23);
  auto rel = std::make_shared<RadicalPoly::Relations>();
  rel->a_square = P("(x+1)^2 + 1 + (y+b)^2");
  rel->b_square = P("(x-1)^2 + 1 + (y-b)^2");
  auto random_radical = [&] {
    return RadicalPoly(rel, random_poly(rng, 2), random_poly(rng, 2), random_poly(rng, 2), random_poly(rng, 2));
  };
  for (int i = 0; i < 100; ++i) {
    const RadicalPoly p = random_radical(), q = random_radical(), r = random_radical();
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("univariate derivative") {
  CHECK(poly_derivative(U({0, 0, 0, 0, 1})) == U({0, 0, 0, 4}));
  CHECK(poly_derivative(U({5})).is_zero());
  // g at b = 3: leading coefficient of g' is 16 (1 + b^2)^2.
  const MultiPoly g = printed::g_quartic().substitute("b", Rational(3));
  REQUIRE(g.variables().size() == 1);
  const UniPoly gu = g.to_univariate(g.variables()[0]);
  CHECK(poly_derivative(gu).leading() == Rational(16 * 100));
  const MultiPoly g0 = printed::g_quartic().substitute("b", Rational(0));
  CHECK(g0.to_univariate(g0.variables()[0]) == U({4, 12, 17, 14, 4}));
}

TEST_CASE("poly_gcd examples") {
  const UniPoly a = U({-1, 1}) * U({-1, 1}) * U({2, 1});
  const UniPoly b = U({-1, 1}) * U({3, 1});
  CHECK(poly_gcd(a, b) == U({-1, 1}));
  CHECK(poly_gcd(U({1, 0, 1}), U({-2, 1})) == U({1}));
  CHECK(poly_gcd(U({2, 4}), UniPoly("y", {})) == UniPoly("y", {Rational(1, 2), Rational(1)}));
  CHECK_THROWS_AS(poly_gcd(UniPoly("y", {}), UniPoly("y", {})), DomainError);
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const UniPoly common = U({c(rng), 1});
    const UniPoly p = common * U({c(rng), c(rng), 1}), q = common * U({c(rng), 1});
    const UniPoly g = poly_gcd(p, q);
    CHECK(p.divmod(g).second.is_zero());
    CHECK(q.divmod(g).second.is_zero());
    CHECK(g.degree() >= 1);
  }
}

TEST_CASE("cubic discriminant examples") {
  CHECK(cubic_discriminant(CubicInX::collect(P("x^3 - x"))) == MultiPoly(4));
  CHECK(cubic_discriminant(CubicInX::collect(P("x^3 + x"))) == MultiPoly(-4));
  CHECK(cubic_discriminant(CubicInX::collect(P("x^3 - 3*x + 2"))).is_zero());
  CHECK_THROWS_AS(CubicInX::collect(P("x^4")), DomainError);
}

TEST_CASE("cubic reassembly") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = random_poly(rng, 2) + random_poly(rng, 2) * P("x^3") + random_poly(rng, 1) * P("x");
    if (p.degree_in("x") > 3) continue;
    CHECK(CubicInX::collect(p).reassemble() == p);
  }
  const CubicInX c = build_P();
  CHECK(c.reassemble() == build_P().reassemble());
}
