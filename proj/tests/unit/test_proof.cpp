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
#include "cubecert/proof.hpp"
#include "cubecert/sturm.hpp"

using namespace cubecert;
using nlohmann::json;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

const SubClaim* claim(const LemmaCertificate& c, const std::string& name) {
  for (const auto& s : c.claims) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<std::string> non_verified(const LemmaCertificate& c) {
  std::vector<std::string> out;
  for (const auto& s : c.claims) {
    if (s.status != Status::kVerified) out.push_back(s.name);
  }
  return out;
}

void check_self_contained(const LemmaCertificate& c) {
  CHECK(revalidate(c).empty());
  // Round trip through JSON keeps everything revalidate needs.
  const LemmaCertificate back = LemmaCertificate::from_json(c.to_json());
  CHECK(back.claims.size() == c.claims.size());
  CHECK(revalidate(back).empty());
}

}  // namespace

TEST_CASE("build_P is deterministic and has degree 3") {
  const CubicInX a = build_P(), b = build_P();
  CHECK(a.reassemble().to_string() == b.reassemble().to_string());
  CHECK(a.reassemble().degree_in("x") == 3);
  CHECK(a.a3 == printed::p_x3_product());
  EliminationSystem broken = EliminationSystem::printed();
  broken.c_ab = MultiPoly(0);
  broken.c_a = MultiPoly(0);
  broken.c_b = MultiPoly(0);
  CHECK_THROWS_AS(build_P(broken), DomainError);
}

TEST_CASE("printed elimination system invariants") {
  const EliminationSystem s = EliminationSystem::printed();
  CHECK(s.c_ab == P("-4*b^2"));
  CHECK(s.a_sq == P("(x+1)^2 + 1 + (y+b)^2"));
  CHECK(s.b_sq == P("(x-1)^2 + 1 + (y-b)^2"));
}

TEST_CASE("P print matches the golden transcription") {
  const LemmaCertificate c = verify_P_print();
  CHECK(c.status == Status::kVerified);
  CHECK(c.claims.size() == 5);
  check_self_contained(c);
}

TEST_CASE("corrupted golden file is refuted with a residual") {
  const LemmaCertificate c = verify_P_print(GoldenSet::from_directory(CUBECERT_TEST_DATA_DIR "/corrupted_golden"));
  CHECK(c.status == Status::kRefuted);
  CHECK(non_verified(c) == std::vector<std::string>{"p_coeff_x1"});
  const SubClaim* x1 = claim(c, "p_coeff_x1");
  REQUIRE(x1);
  CHECK(x1->evidence.at("result").at("residual_terms").get<int>() == 1);
  CHECK(x1->evidence.at("result").at("residual").get<std::string>() == "1*y^7*b^9");
  CHECK_THROWS_AS(GoldenSet::from_directory(CUBECERT_TEST_DATA_DIR "/does_not_exist"), IoError);
  GoldenSet missing = GoldenSet::embedded();
  missing.files.erase("p_coeff_x0");
  CHECK(verify_P_print(missing).status == Status::kRefuted);
}

TEST_CASE("P special cases") {
  const LemmaCertificate c = verify_P_special_cases();
  CHECK(c.status == Status::kVerified);
  check_self_contained(c);
}

TEST_CASE("discriminant factorization") {
  const LemmaCertificate c = verify_discriminant_factorization();
  CHECK(c.status == Status::kVerified);
  CHECK(claim(c, "spot_check_y3_b2")->status == Status::kVerified);
  CHECK(claim(c, "vanishes_at_b0")->status == Status::kVerified);
  check_self_contained(c);
}

TEST_CASE("symbolic identities agree at random rational points") {
  const MultiPoly disc = cubic_discriminant(build_P());
  const DiscriminantFactors f = DiscriminantFactors::printed();
  const MultiPoly r = printed::r_parabola();
  const MultiPoly vertex = P("((b^2+1)*y - b*(b^2+2))^2 + (2+b^2)");
  const MultiPoly Pfull = build_P().reassemble();
  const MultiPoly p_x3 = printed::p_x3_product();
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 5);
  for (int i = 0; i < 100; ++i) {
    const std::map<std::string, Rational> pt = {{"y", Rational(num(rng), den(rng))}, {"b", Rational(num(rng), den(rng))}};
    Rational prod = f.constant;
    for (const auto& [fac, e] : f.factors) prod *= fac.evaluate(pt).pow(static_cast<int>(e));
    CHECK(disc.evaluate(pt) == prod);
    CHECK((P("b^2+1") * r).evaluate(pt) == vertex.evaluate(pt));
    CHECK(Pfull.coefficients_in("x")[3].evaluate(pt) == p_x3.evaluate(pt));
  }
}

TEST_CASE("negative discriminant means one real root in x") {
  const MultiPoly disc = cubic_discriminant(build_P());
  const MultiPoly Pfull = build_P().reassemble();
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> num(1, 30), den(1, 4);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const Rational y(num(rng), den(rng)), b(num(rng) - 15, den(rng));
    if (b.is_zero()) continue;
    const Rational d = disc.evaluate({{"y", y}, {"b", b}});
    if (!(d < Rational(0))) continue;
    const MultiPoly px = Pfull.substitute("y", y).substitute("b", b);
    CHECK(count_roots(build_chain(px.to_univariate("x")), std::nullopt, std::nullopt).count == 1);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("T3 vertex identity") {
  const LemmaCertificate c = verify_T3();
  CHECK(c.status == Status::kVerified);
  CHECK(claim(c, "vertex_value_b1")->status == Status::kVerified);
  CHECK(printed::r_parabola().substitute("b", Rational(1)).substitute("y", Rational(3, 2)) == MultiPoly(Rational(3, 2)));
  CHECK(printed::r_parabola().substitute("b", P("-b")) == printed::r_companion());
  CHECK(!c.notes.empty());
  check_self_contained(c);
}

TEST_CASE("T4 positivity") {
  const LemmaCertificate c = verify_T4_positive(default_b_samples());
  CHECK(c.status == Status::kVerified);
  CHECK(default_b_samples().size() == 1007);
  const SubClaim* iso = claim(c, "g4_sign_poly_root_isolation");
  REQUIRE(iso);
  CHECK(iso->status == Status::kVerified);
  CHECK(claim(c, "b0_positive_coefficients")->status == Status::kVerified);
  CHECK(claim(c, "chain_length_b1")->status == Status::kVerified);
  check_self_contained(c);
  CHECK_THROWS_AS(verify_T4_positive({}), DomainError);
}

TEST_CASE("T1 case analysis") {
  const LemmaCertificate c = verify_T1_negative();
  // The printed maximum b^2 (b^2 - 8) / (8 (1 + b^2)) misses a square on
  // (b^2 - 8); everything else holds.
  CHECK(c.status == Status::kRefuted);
  CHECK(non_verified(c) == std::vector<std::string>{"maximum_value_printed"});
  CHECK(claim(c, "maximum_value_corrected")->status == Status::kVerified);
  CHECK(claim(c, "example_b0_y1")->status == Status::kVerified);
  CHECK(printed::t1().substitute("b", Rational(0)).substitute("y", Rational(1)) == MultiPoly(-18));
  check_self_contained(c);
}

TEST_CASE("T2 double root") {
  const LemmaCertificate c = verify_T2_case();
  CHECK(c.status == Status::kVerified);
  CHECK(printed::t2().substitute("b", Rational(1)) == MultiPoly(-4));
  check_self_contained(c);
  CHECK_THROWS_AS(verify_T2_case({Rational(1)}), DomainError);
}

TEST_CASE("T2 special point at b = 2") {
  const T2SpecialPoint p = t2_special_point(Rational(2));
  CHECK(p.x == QuadExt(Rational(2), Rational(0), Rational(2)));
  CHECK(p.y == QuadExt(Rational(2), Rational(0), Rational(5, 3)));
  CHECK(p.lhs_numerator.is_zero());
  CHECK(p.rhs_numerator == QuadExt(Rational(2), Rational(8), Rational(-8, 3)));
  CHECK(certify_sign(p.rhs_numerator.to_expr()) == Sign::kPositive);
  CHECK_THROWS_AS(t2_special_point(Rational(1)), DomainError);
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt s(Rational(2), Rational(0), Rational(1));  // sqrt 2
  CHECK(s * s == QuadExt(Rational(2)));
  CHECK((s + QuadExt(Rational(1))) * (s - QuadExt(Rational(1))) == QuadExt(Rational(1)));
  CHECK(QuadExt(Rational(1)) / (s + QuadExt(Rational(1))) == s - QuadExt(Rational(1)));
  CHECK_THROWS_AS(s + QuadExt(Rational(3), Rational(0), Rational(1)), DomainError);
  CHECK_THROWS_AS(QuadExt(Rational(1)) / QuadExt(Rational(0)), DivisionByZero);
  CHECK(QuadExt::from_json(s.to_json()) == s);
}

TEST_CASE("asymptotic signs") {
  const LemmaCertificate c = verify_asymptotics(Rational(1, 2), Rational(1));
  CHECK(c.status == Status::kVerified);
  check_self_contained(c);
  const LemmaCertificate z = verify_asymptotics(Rational(0), Rational(1));
  CHECK(z.status == Status::kVerified);
  CHECK_THROWS_AS(verify_asymptotics(Rational(2), Rational(1)), DomainError);
  // f(x) sqrt(x) near -b^2 sqrt(2) at x = 1e6
  const double f = reduced_main_sides(1e6, 1.0, 0.5).difference * 1e3;
  CHECK(f == doctest::Approx(-0.25 * std::sqrt(2.0)).epsilon(0.01));
}

TEST_CASE("elimination linkage") {
  const LemmaCertificate c = verify_elimination_from_main();
  CHECK(c.status != Status::kRefuted);
  CHECK(claim(c, "numeric_consistency_1_2_half")->status == Status::kVerified);
  CHECK(claim(c, "common_root_y2_b_half")->status == Status::kVerified);
  CHECK(claim(c, "b_zero_P_negative")->status == Status::kVerified);
  const SubClaim* link = claim(c, "linking_identity");
  REQUIRE(link);
  if (link->status == Status::kVerified) CHECK(link->evidence.at("cofactor").get<std::string>() == "1");
  check_self_contained(c);
}

TEST_CASE("tampered evidence fails revalidation") {
  LemmaCertificate c = verify_T3();
  REQUIRE(!c.claims.empty());
  REQUIRE(c.claims[0].evidence.at("kind") == "identity");
  c.claims[0].evidence["rhs"] = "y + 1";
  CHECK(revalidate(c) == std::vector<std::string>{c.claims[0].name});
  LemmaCertificate d = verify_P_special_cases();
  d.claims[1].evidence["value"] = "1";
  CHECK(revalidate(d) == std::vector<std::string>{"y_zero"});
}

TEST_CASE("certificate status rules") {
  LemmaCertificate c;
  c.finalize();
  CHECK(c.status == Status::kUndecided);
  c.add("a", true, json{{"kind", "note"}});
  c.finalize();
  CHECK(c.status == Status::kVerified);
  c.add("b", Status::kUndecided, json{{"kind", "note"}});
  c.finalize();
  CHECK(c.status == Status::kUndecided);
  c.add("c", false, json{{"kind", "note"}});
  c.finalize();
  CHECK(c.status == Status::kRefuted);
  CHECK(status_from_string(to_string(Status::kRefuted)) == Status::kRefuted);
}
