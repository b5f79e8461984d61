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

#include <algorithm>
#include <random>
#include <set>

#include "cubecert/errors.hpp"
#include "cubecert/proof.hpp"
#include "cubecert/sturm.hpp"

using namespace cubecert;

namespace {

UniPoly U(std::vector<Rational> c) { return UniPoly("t", std::move(c)); }
UniPoly linear(const Rational& root) { return U({-root, Rational(1)}); }

UniPoly b0_poly() {
  const MultiPoly p = printed::g4_at0_sign();
  return p.to_univariate(p.variables()[0]);
}

bool proportional(const UniPoly& a, const UniPoly& b) {
  return a.degree() == b.degree() && a.monic() == b.monic();
}

}  // namespace

TEST_CASE("square_free_part examples") {
  const UniPoly p = linear(1) * linear(1) * linear(-2);
  CHECK(proportional(square_free_part(p), linear(1) * linear(-2)));
  const UniPoly q = linear(3) * linear(5);
  CHECK(proportional(square_free_part(q), q));
  CHECK(proportional(square_free_part(U({0, 0, 0, 1})), U({0, 1})));
  CHECK_THROWS_AS(square_free_part(UniPoly()), DomainError);
}

TEST_CASE("build_chain examples") {
  const SturmChain c = build_chain(U({-2, 0, 1}));
  REQUIRE(c.size() == 3);
  CHECK(c.polys()[0] == U({-2, 0, 1}));
  CHECK(c.polys()[1] == U({0, 2}));
  CHECK(c.polys()[2] == U({2}));
  CHECK(build_chain(U({3, 7})).size() == 2);
  const MultiPoly g = printed::g_quartic().substitute("b", Rational(1));
  CHECK(build_chain(g.to_univariate(g.variables()[0])).size() == 5);
  CHECK_THROWS_AS(build_chain(UniPoly()), DomainError);
}

TEST_CASE("count_roots examples") {
  const SturmChain c = build_chain(U({-2, 0, 1}));
  CHECK(count_roots(c, Rational(0), Rational(2)).count == 1);
  CHECK(count_roots(c, std::nullopt, std::nullopt).count == 2);
  CHECK(count_roots(build_chain(U({1, 0, 1})), std::nullopt, std::nullopt).count == 0);
  const SturmChain b0 = build_chain(b0_poly());
  CHECK(count_roots(b0, Rational(0), std::nullopt).count == 1);
  CHECK(count_roots(b0, Rational(22, 100), Rational(23, 100)).count == 1);
}

TEST_CASE("endpoint roots") {
  const SturmChain c = build_chain(U({-1, 0, 1}));
  CHECK_THROWS_AS(count_roots(c, Rational(1), Rational(2)), RootCountError);
  CHECK_THROWS_AS(count_roots(c, Rational(2), Rational(1)), RootCountError);
  const RootCount r = count_roots_perturbed(c, Rational(-1), Rational(1));
  // (-1, 1] holds the root 1 only.
  CHECK(r.count == 1);
  CHECK(r.perturbed_lo.has_value());
}

TEST_CASE("isolate_root examples") {
  const SturmChain c = build_chain(U({-2, 0, 1}));
  const IsolatingInterval r = isolate_root(c, Rational(1), Rational(2), Rational(1, 100));
  CHECK(r.lo * r.lo < Rational(2));
  CHECK(r.hi * r.hi > Rational(2));
  CHECK(r.hi - r.lo <= Rational(1, 100));
  const SturmChain b0 = build_chain(b0_poly());
  const IsolatingInterval s = isolate_root(b0, Rational(22, 100), Rational(23, 100), Rational(1, 1000));
  CHECK(s.hi - s.lo <= Rational(1, 1000));
  CHECK(count_roots_perturbed(b0, s.lo, s.hi).count == 1);
  const IsolatingInterval h = isolate_root(build_chain(linear(Rational(1, 2))), Rational(0), Rational(1), Rational(1, 4));
  CHECK(h.lo < Rational(1, 2));
  CHECK(Rational(1, 2) <= h.hi);
  CHECK_THROWS_AS(isolate_root(c, Rational(-2), Rational(2), Rational(1, 10)), RootCountError);
}

TEST_CASE("root counts match constructed roots") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 4), mult(1, 3), nroots(0, 4), c(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<Rational> roots;
    UniPoly p = U({Rational(c(rng))});
    int degree = 0;
    for (long k = nroots(rng); k > 0; --k) {
      const Rational r(num(rng), den(rng));
      const long m = std::min<long>(mult(rng), 8 - degree);
      if (m <= 0) break;
      for (long j = 0; j < m; ++j) p = p * linear(r);
      degree += static_cast<int>(m);
      roots.insert(r);
    }
    if (degree <= 6 && std::uniform_int_distribution<int>(0, 1)(rng)) p = p * U({Rational(c(rng)), 0, 1});
    if (p.degree() < 1) continue;
    // Endpoints on a finer grid than the roots, so never roots themselves.
    const Rational lo(2 * num(rng) + 1, 8), hi(2 * num(rng) + 1, 8);
    if (!(lo < hi)) continue;
    const int expected =
        static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return lo < r && r <= hi; }));
    const SturmChain chain = build_chain(p);
    CHECK(count_roots(chain, lo, hi).count == expected);
    CHECK(count_roots(chain, std::nullopt, std::nullopt).count == static_cast<int>(roots.size()));
  }
}

TEST_CASE("variations are non-increasing in the endpoint") {
  const UniPoly p = linear(-3) * linear(Rational(1, 2)) * linear(2) * U({1, 0, 1});
  const SturmChain c = build_chain(p);
  int prev = c.variations(std::nullopt, false);
  for (int k = -40; k <= 40; ++k) {
    const Rational t(2 * k + 1, 8);
    const int v = c.variations(t, true);
    CHECK(v <= prev);
    prev = v;
  }
  CHECK(c.variations(std::nullopt, true) <= prev);
}

TEST_CASE("discriminant sign agrees with root counts") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 5);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational a3(num(rng), den(rng)), a2(num(rng), den(rng)), a1(num(rng), den(rng)), a0(num(rng), den(rng));
    if (a3.is_zero()) continue;
    const Rational disc = cubic_discriminant({a3, a2, a1, a0}).as_constant().value_or(Rational(0));
    if (disc.is_zero()) continue;
    const int roots = count_roots(build_chain(U({a0, a1, a2, a3})), std::nullopt, std::nullopt).count;
    CHECK((disc < Rational(0)) == (roots == 1));
    CHECK((disc > Rational(0)) == (roots == 3));
    ++checked;
  }
  CHECK(checked > 900);
}
