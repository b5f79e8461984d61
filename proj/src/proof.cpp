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

#include "cubecert/proof.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cubecert/errors.hpp"
#include "evidence.hpp"
#include "reduced_main.hpp"

namespace cubecert {

namespace detail {
const std::map<std::string, std::string>& embedded_golden_files();
}

using nlohmann::json;
using detail::add_checked;

namespace {

MultiPoly poly(std::string_view s) { return parse_poly(s); }

constexpr const char* kCA = "4*b*y - 4*b^2*x + b^2 - b^2*y^2 + 2*b^3*y - b^4 - 2 - y^2";
constexpr const char* kCB = "-4*b^2*x + b^2*y^2 + 2*b^3*y + b^4 + 2 + y^2 + 4*b*y - b^2";
constexpr const char* kCAB = "-4*b^2";
constexpr const char* kL = "-4 - 4*b^2*x^2 + 4*b^3*y*x - 2*b^4 + 8*b*y*x - 2*b^2 - 2*b^2*y^2 - 2*y^2";
constexpr const char* kASq = "(x+1)^2 + 1 + (y+b)^2";
constexpr const char* kBSq = "(x-1)^2 + 1 + (y-b)^2";

constexpr const char* kT1 = "-8 - 16*b^2 - 8*b^4 - 8*y^2 + 20*b^2*y^2 + b^4*y^2 - 2*y^4 - 2*b^2*y^4";
constexpr const char* kT2 = "-b^4*y^2 + 2*b^2*y^2 - y^2 - 2 - 3*b^2 + b^6";
constexpr const char* kT3 = "(b^2*y^2 + y^2 + 2 + 3*b^2 + b^4)^2 - (4*b*y + 2*b^3*y)^2";
constexpr const char* kT4 =
    "4 + 24*b^2 + 3*b^12 + 76*b^6 + 54*b^8 + 20*b^10 + 4*y^8 + 14*y^6 + 17*y^4 + 12*y^2 + 59*b^4"
    " - 14*b^6*y^6 + 19*b^8*y^4 - 12*b^10*y^2 + 4*y^8*b^4 + 8*y^8*b^2 - 22*b^4*y^6 + 46*b^6*y^4"
    " + 6*b^2*y^6 + 4*b^4*y^2 + 20*b^4*y^4 - 52*b^6*y^2 + 26*b^2*y^4 - 48*b^8*y^2 + 32*b^2*y^2";
constexpr const char* kG =
    "4*(1+b^2)^2*Y^4 - 2*(1+b^2)*(7*b^4+4*b^2-7)*Y^3 + (19*b^8+26*b^2+20*b^4+46*b^6+17)*Y^2"
    " - 4*(3*b^6+6*b^4-2*b^2-3)*(1+b^2)^2*Y + (3*b^2+2)*(b^2+2)*(1+b^2)^4";
constexpr const char* kR = "b^2*y^2 + y^2 + 2 - 4*b*y + 3*b^2 - 2*b^3*y + b^4";
constexpr const char* kRCompanion = "b^2*y^2 + y^2 + 2 + 4*b*y + 3*b^2 + 2*b^3*y + b^4";
constexpr const char* kPX3 =
    "-128*b^3*y^3*(b^2*y^2+y^2+2+4*b*y+3*b^2+2*b^3*y+b^4)*(b^2*y^2+y^2+2-4*b*y+3*b^2-2*b^3*y+b^4)";
constexpr const char* kPB0 = "-16*(y^2+1)*(y^2+2)^4";
constexpr const char* kPY0 = "-16*(b^2+1)^5*(8*b^2*(b^2+2)^2*x^2 + (3*b^2+2)^2*(b^2-2)^2)";

constexpr const char* kQ10 = "12*b^10 - 91*b^8 + 560*b^6 + 2182*b^4 + 1060*b^2 - 59";
constexpr const char* kQ22 =
    "3*b^22 - 37*b^20 - 928*b^18 - 74*b^16 + 8954*b^14 - 4262*b^12 - 35980*b^10 + 12864*b^8"
    " + 54811*b^6 + 25171*b^4 + 1044*b^2 - 638";
constexpr const char* kQ24 =
    "3*b^24 - 108*b^22 - 978*b^20 + 3700*b^18 + 16069*b^16 - 36120*b^14 - 78876*b^12 + 96712*b^10"
    " + 112317*b^8 - 34812*b^6 - 47410*b^4 - 6844*b^2 + 923";
constexpr const char* kQ8 = "-5/8*b^8 - 25*b^6 - 203/4*b^4 - 47*b^2 + 11/8";
constexpr const char* kQ8Denominator = "5*b^8 + 200*b^6 + 406*b^4 + 376*b^2 - 11";

// Printed values g_i(0) of the Sturm chain of g, as numerator/denominator.
json printed_chain_at0() {
  const std::string d8 = std::string("(") + kQ8Denominator + ")^2";
  return json::array({
      {{"num", "(3*b^2+2)*(b^2+2)*(b^2+1)^4"}, {"den", "1"}},
      {{"num", "-4*(3*b^6+6*b^4-2*b^2-3)*(b^2+1)^2"}, {"den", "1"}},
      {{"num", "-1/8*(b^2+1)*(3*b^10+82*b^8+307*b^6+383*b^4+158*b^2+11)"}, {"den", "1"}},
      {{"num", std::string("32*(b^2+1)^2*(") + kQ22 + ")"}, {"den", d8}},
      {{"num", std::string("1/16*(") + kQ10 + ")*(b^8+b^6-13*b^4+11*b^2+8)^2*" + d8 + "*(b^2+1)^8"},
       {"den", std::string("(") + kQ24 + ")^2"}},
  });
}

// Printed expressions whose signs are the chain's signs at +inf.
json printed_chain_lead() {
  return json::array({"4*(b^2+1)^2", "16*(b^2+1)^2", kQ8, std::string("-32*(") + kQ24 + ")",
                      std::string("(") + kQ10 + ")"});
}

json rat(const Rational& q) { return q.to_string(); }

json qext_point_json(const std::map<std::string, QuadExt>& point) {
  json j = json::object();
  for (const auto& [k, v] : point) j[k] = v.to_json();
  return j;
}

}  // namespace

namespace printed {
MultiPoly t1() { return poly(kT1); }
MultiPoly t2() { return poly(kT2); }
MultiPoly t3() { return poly(kT3); }
MultiPoly t4() { return poly(kT4); }
MultiPoly g_quartic() { return poly(kG); }
MultiPoly r_parabola() { return poly(kR); }
MultiPoly r_companion() { return poly(kRCompanion); }
MultiPoly p_x3_product() { return poly(kPX3); }
MultiPoly p_at_b0() { return poly(kPB0); }
MultiPoly p_at_y0() { return poly(kPY0); }
MultiPoly g4_at0_sign() { return poly(kQ10); }
MultiPoly g3_at0_numerator() { return poly(kQ22); }
MultiPoly g3_lead_numerator() { return poly(kQ24); }
MultiPoly g2_lead_sign() { return poly(kQ8); }
}  // namespace printed

EliminationSystem EliminationSystem::printed() {
  return {poly(kCA), poly(kCB), poly(kCAB), poly(kL), poly(kASq), poly(kBSq)};
}

RadicalPoly::RelationsPtr EliminationSystem::relations() const {
  auto r = std::make_shared<RadicalPoly::Relations>();
  r->a_square = a_sq;
  r->b_square = b_sq;
  return r;
}

DiscriminantFactors DiscriminantFactors::printed() {
  return {Rational(16777216),
          {{poly("1+b^2"), 2}, {poly(kT1), 1}, {poly(kT2), 2}, {poly(kT3), 2}, {poly(kT4), 2}, {poly("b"), 6}}};
}

MultiPoly DiscriminantFactors::expand() const {
  MultiPoly out(constant);
  for (const auto& [f, e] : factors) out *= f.pow(e);
  return out;
}

CubicInX build_P(const EliminationSystem& s) {
  const MultiPoly& a2 = s.a_sq;
  const MultiPoly& b2 = s.b_sq;
  const MultiPoly inner = s.c_a.pow(2) * a2 + s.c_b.pow(2) * b2 - s.l.pow(2) - s.c_ab.pow(2) * a2 * b2;
  const MultiPoly cross = s.c_ab * s.l - s.c_a * s.c_b;
  const MultiPoly p = inner.pow(2) - MultiPoly(4) * a2 * b2 * cross.pow(2);
  const unsigned deg = p.degree_in("x");
  if (deg != 3) throw DomainError("P has degree " + std::to_string(deg) + " in x, expected 3");
  return CubicInX::collect(p, "x");
}

GoldenSet GoldenSet::embedded() { return {detail::embedded_golden_files()}; }

GoldenSet GoldenSet::from_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("golden directory not found: " + dir);
  GoldenSet g;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".poly") continue;
    std::ifstream in(entry.path());
    if (!in) throw IoError("cannot read " + entry.path().string());
    std::ostringstream buf;
    buf << in.rdbuf();
    g.files[entry.path().stem().string()] = buf.str();
  }
  return g;
}

// ------------------------------------------------------------ P(x)

LemmaCertificate verify_P_print(const GoldenSet& golden) {
  LemmaCertificate cert;
  cert.lemma_id = "p-print";
  add_checked(cert, "x3_factored_form", {{"kind", "p_coefficient"}, {"power", 3}, {"expected", kPX3}});
  for (int k = 3; k >= 0; --k) {
    const std::string name = "p_coeff_x" + std::to_string(k);
    auto it = golden.files.find(name);
    if (it == golden.files.end()) {
      cert.add(name, Status::kRefuted, {{"kind", "p_coefficient"}, {"power", k}, {"error", "missing golden file"}});
      continue;
    }
    std::string text = it->second;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    add_checked(cert, name, {{"kind", "p_coefficient"}, {"power", k}, {"expected", text}});
  }
  cert.finalize();
  return cert;
}

LemmaCertificate verify_P_special_cases() {
  LemmaCertificate cert;
  cert.lemma_id = "p-special";
  add_checked(cert, "b_zero", {{"kind", "p_substitution"}, {"var", "b"}, {"value", "0"}, {"expected", kPB0}});
  add_checked(cert, "y_zero", {{"kind", "p_substitution"}, {"var", "y"}, {"value", "0"}, {"expected", kPY0}});
  cert.finalize();
  return cert;
}

LemmaCertificate verify_discriminant_factorization() {
  LemmaCertificate cert;
  cert.lemma_id = "discriminant";
  const DiscriminantFactors f = DiscriminantFactors::printed();
  json factors = json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"poly", p.to_string()}, {"exponent", e}});
  const json base = {{"constant", rat(f.constant)}, {"factors", factors}};

  json ev = base;
  ev["kind"] = "discriminant_identity";
  add_checked(cert, "exact_equality", ev);

  ev = base;
  ev["kind"] = "discriminant_point";
  ev["point"] = {{"y", "3"}, {"b", "2"}};
  add_checked(cert, "spot_check_y3_b2", ev);

  ev = base;
  ev["kind"] = "discriminant_point";
  ev["point"] = {{"y", "2"}, {"b", "0"}};
  add_checked(cert, "vanishes_at_b0", ev);

  json points = json::array();
  for (const char* y : {"1/2", "1", "2", "3", "7/3"}) {
    for (const char* b : {"-2", "-1/3", "1/4", "1/2", "1", "3/2", "2", "3"}) points.push_back({{"y", y}, {"b", b}});
  }
  add_checked(cert, "negative_discriminant_single_root", {{"kind", "root_structure"}, {"points", points}});
  cert.finalize();
  return cert;
}

// ------------------------------------------------------------ T3

LemmaCertificate verify_T3() {
  LemmaCertificate cert;
  cert.lemma_id = "t3";
  add_checked(cert, "vertex_identity",
              {{"kind", "identity"},
               {"lhs", std::string("(b^2+1)*(") + kR + ")"},
               {"rhs", "((b^2+1)*y - b*(b^2+2))^2 + (2+b^2)"}});
  // r(y*) (1+b^2)^2 = (2+b^2)(1+b^2) at y* = b(b^2+2)/(b^2+1)
  add_checked(cert, "vertex_value",
              {{"kind", "fraction_substitution"},
               {"poly", kR},
               {"var", "y"},
               {"num", "b*(b^2+2)"},
               {"den", "b^2+1"},
               {"expected", "(2+b^2)*(1+b^2)"}});
  add_checked(cert, "vertex_value_b1",
              {{"kind", "rational_eval"}, {"poly", kR}, {"point", {{"b", "1"}, {"y", "3/2"}}}, {"expected", "3/2"}});
  add_checked(cert, "companion_by_b_to_minus_b",
              {{"kind", "substitution"}, {"poly", kR}, {"var", "b"}, {"value", "-b"}, {"expected", kRCompanion}});
  add_checked(cert, "difference_of_squares",
              {{"kind", "identity"},
               {"lhs", kT3},
               {"rhs", std::string("(") + kR + ")*(" + kRCompanion + ")"}});
  cert.notes.push_back(
      "The minimum of r(y) is attained at y = +b(b^2+2)/(b^2+1); the printed abscissa carries the opposite sign. "
      "At b = 1 the value there is 3/2 as printed.");
  cert.notes.push_back(
      "Factors are bound by formula: the quartic in y^2 is the lemma's T4 and the product of the two parabolas is "
      "the squared T3 factor of the discriminant, although the lemma statements swap the labels.");
  cert.finalize();
  return cert;
}

// ------------------------------------------------------------ T4

std::vector<Rational> default_b_samples(std::size_t count) {
  std::vector<Rational> out;
  const long n = static_cast<long>(count);
  for (long k = 0; k < n; ++k) out.push_back(n == 1 ? Rational(0) : Rational(10 * k, n - 1));
  for (const char* s : {"1414/1000", "1415/1000", "2828/1000", "2829/1000", "22/100", "23/100"}) {
    out.push_back(Rational::from_string(s));
  }
  return out;
}

LemmaCertificate verify_T4_positive(const std::vector<Rational>& b_samples) {
  if (b_samples.empty()) throw DomainError("verify_T4_positive needs at least one b sample");
  LemmaCertificate cert;
  cert.lemma_id = "t4";
  add_checked(cert, "quartic_in_y_squared",
              {{"kind", "square_substitution"}, {"poly", kT4}, {"var", "y"}, {"new_var", "Y"}, {"expected", kG}});

  json samples = json::array();
  for (const auto& b : b_samples) samples.push_back(rat(b));
  add_checked(cert, "no_nonnegative_roots_sweep",
              {{"kind", "root_sweep"},
               {"poly", kG},
               {"var", "Y"},
               {"param", "b"},
               {"samples", samples},
               {"lo", "0"},
               {"hi", nullptr},
               {"expected", 0},
               {"positive_at_lo", true}});
  add_checked(cert, "chain_length_b1",
              {{"kind", "chain_length"}, {"poly", kG}, {"var", "Y"}, {"param", "b"}, {"value", "1"}, {"expected", 5}});
  add_checked(cert, "b0_positive_coefficients",
              {{"kind", "positive_coefficients"}, {"poly", kG}, {"var", "Y"}, {"param", "b"}, {"value", "0"}});
  for (const char* b : {"1/5", "1/2", "1", "3"}) {
    add_checked(cert, std::string("printed_chain_b") + b,
                {{"kind", "sturm_printed"},
                 {"poly", kG},
                 {"var", "Y"},
                 {"param", "b"},
                 {"value", b},
                 {"at0", printed_chain_at0()},
                 {"lead_sign", printed_chain_lead()}});
  }
  add_checked(cert, "g4_sign_poly_one_root_on_nonnegative_axis",
              {{"kind", "root_count"}, {"poly", kQ10}, {"var", "b"}, {"lo", "0"}, {"hi", nullptr}, {"expected", 1},
               {"closed_lo", true}});
  add_checked(cert, "g4_sign_poly_root_in_0.22_0.23",
              {{"kind", "root_count"}, {"poly", kQ10}, {"var", "b"}, {"lo", "11/50"}, {"hi", "23/100"},
               {"expected", 1}, {"closed_lo", true}});
  add_checked(cert, "g4_sign_poly_root_isolation",
              {{"kind", "root_isolation"}, {"poly", kQ10}, {"var", "b"}, {"lo", "11/50"}, {"hi", "23/100"},
               {"width", "1/1000"}});
  add_checked(cert, "g3_at0_numerator_no_roots_0_0.23",
              {{"kind", "root_count"}, {"poly", kQ22}, {"var", "b"}, {"lo", "0"}, {"hi", "23/100"}, {"expected", 0},
               {"closed_lo", true}});
  add_checked(cert, "g3_leading_no_roots_0_0.23",
              {{"kind", "root_count"}, {"poly", kQ24}, {"var", "b"}, {"lo", "0"}, {"hi", "23/100"}, {"expected", 0},
               {"closed_lo", true}});
  add_checked(cert, "g2_leading_no_roots_0.22_inf",
              {{"kind", "root_count"}, {"poly", kQ8}, {"var", "b"}, {"lo", "11/50"}, {"hi", nullptr}, {"expected", 0},
               {"closed_lo", true}});
  add_checked(cert, "endpoint_signs",
              {{"kind", "sign_values"},
               {"items", json::array({
                             {{"poly", kQ10}, {"var", "b"}, {"at", "0"}, {"expected", -1}},
                             {{"poly", kQ22}, {"var", "b"}, {"at", "0"}, {"expected", -1}},
                             {{"poly", kQ24}, {"var", "b"}, {"at", "0"}, {"expected", 1}},
                             {{"poly", kQ8}, {"var", "b"}, {"at", "+inf"}, {"expected", -1}},
                         })}});
  cert.notes.push_back(
      "The leading coefficient of g2 equals -(1/16)(5b^8+200b^6+406b^4+376b^2-11); the printed expression is twice "
      "that. Only its sign enters the argument, and the signs agree.");
  cert.finalize();
  return cert;
}

// ------------------------------------------------------------ T1

LemmaCertificate verify_T1_negative() {
  LemmaCertificate cert;
  cert.lemma_id = "t1";
  const std::string t1_in_Y = printed::t1().substitute_square("y", "Y").to_string();
  const std::string c = "-8 + 20*b^2 + b^4";
  const std::string den = "4*(1+b^2)";

  add_checked(cert, "quadratic_in_y_squared",
              {{"kind", "identity"}, {"lhs", t1_in_Y}, {"rhs", "(-2-2*b^2)*Y^2 + (-8+20*b^2+b^4)*Y - 8*(1+b^2)^2"}});
  const std::string dT1 = printed::t1().substitute_square("y", "Y").derivative("Y").to_string();
  add_checked(cert, "critical_point",
              {{"kind", "fraction_substitution"}, {"poly", dT1}, {"var", "Y"}, {"num", c}, {"den", den},
               {"expected", "0"}});
  // T1(Y0) * (4(1+b^2))^2 * 8(1+b^2) against value * 8(1+b^2) * (4(1+b^2))^2
  add_checked(cert, "maximum_value_printed",
              {{"kind", "fraction_substitution"}, {"poly", t1_in_Y}, {"var", "Y"}, {"num", c}, {"den", den},
               {"factor", "8*(1+b^2)"}, {"expected", "b^2*(b^2-8)*16*(1+b^2)^2"}});
  add_checked(cert, "maximum_value_corrected",
              {{"kind", "fraction_substitution"}, {"poly", t1_in_Y}, {"var", "Y"}, {"num", c}, {"den", den},
               {"factor", "8*(1+b^2)"}, {"expected", "b^2*(b^2-8)^3*16*(1+b^2)^2"}});
  // Y0 at b = 3 is 253/40; T1 there is 9/80 under both formulas.
  add_checked(cert, "maximum_value_b3",
              {{"kind", "rational_eval"}, {"poly", t1_in_Y}, {"point", {{"b", "3"}, {"Y", "253/40"}}},
               {"expected", "9/80"}});
  add_checked(cert, "example_b0_y1",
              {{"kind", "rational_eval"}, {"poly", kT1}, {"point", {{"b", "0"}, {"y", "1"}}}, {"expected", "-18"}});

  // (ii) u^2 + 20u - 8 <= 0 for u >= 0 iff u <= -10 + 6 sqrt(3)
  const std::map<std::string, QuadExt> root = {{"u", QuadExt(Rational(3), Rational(-10), Rational(6))}};
  add_checked(cert, "threshold_root",
              {{"kind", "qext_eval"}, {"poly", "u^2 + 20*u - 8"}, {"point", qext_point_json(root)},
               {"expected", QuadExt(Rational(0)).to_json()}});
  add_checked(cert, "threshold_root_positive", {{"kind", "sign"}, {"expr", "-10 + 6*sqrt(3)"}, {"expected", "positive"}});
  add_checked(cert, "threshold_other_root_negative",
              {{"kind", "sign"}, {"expr", "-10 - 6*sqrt(3)"}, {"expected", "negative"}});
  add_checked(cert, "threshold_is_c_in_u",
              {{"kind", "substitution"}, {"poly", "u^2 + 20*u - 8"}, {"var", "u"}, {"value", "b^2"}, {"expected", c}});
  // For c <= 0 every coefficient of T1(Y) is <= 0 and the constant is < 0.
  add_checked(cert, "small_b_constant_negative",
              {{"kind", "sign_values"},
               {"items", json::array({{{"poly", "-8*(1+u)^2"}, {"var", "u"}, {"at", "0"}, {"expected", -1}}})}});

  // (iii) u = b^2 >= 8: 3u^2 - 16u + 8 >= 0 and its square dominates u(u-8)^3.
  add_checked(cert, "radical_isolated_lhs",
              {{"kind", "identity"}, {"lhs", "4*u*(u+1) - (u^2 + 20*u - 8)"}, {"rhs", "3*u^2 - 16*u + 8"}});
  add_checked(cert, "discriminant_of_T1_in_Y",
              {{"kind", "identity"}, {"lhs", "(u^2 + 20*u - 8)^2 - 64*(1+u)^3"}, {"rhs", "u*(u-8)^3"}});
  add_checked(cert, "radical_isolated_lhs_nonnegative",
              {{"kind", "root_count"}, {"poly", "3*u^2 - 16*u + 8"}, {"var", "u"}, {"lo", "8"}, {"hi", nullptr},
               {"expected", 0}, {"closed_lo", true}});
  add_checked(cert, "squared_comparison_identity",
              {{"kind", "identity"}, {"lhs", "(3*u^2 - 16*u + 8)^2 - u*(u-8)^3"},
               {"rhs", "8*u^4 - 72*u^3 + 112*u^2 + 256*u + 64"}});
  add_checked(cert, "squared_comparison_no_roots",
              {{"kind", "root_count"}, {"poly", "8*u^4 - 72*u^3 + 112*u^2 + 256*u + 64"}, {"var", "u"}, {"lo", "8"},
               {"hi", nullptr}, {"expected", 0}, {"closed_lo", true}});
  add_checked(cert, "squared_comparison_positive_at_8",
              {{"kind", "sign_values"},
               {"items", json::array({{{"poly", "8*u^4 - 72*u^3 + 112*u^2 + 256*u + 64"}, {"var", "u"}, {"at", "8"},
                                       {"expected", 1}},
                                      {{"poly", "3*u^2 - 16*u + 8"}, {"var", "u"}, {"at", "8"}, {"expected", 1}}})}});
  // Interval endpoints at b = 3: c = 253, sqrt(b^2 (b^2-8)^3) = 3.
  add_checked(cert, "interval_lower_endpoint_real_b3",
              {{"kind", "sign"}, {"expr", "(253 - sqrt(9)) / 40"}, {"expected", "positive"}});
  add_checked(cert, "interval_upper_endpoint_below_b_b3",
              {{"kind", "sign"}, {"expr", "3 - sqrt((253 + sqrt(9)) / 40)"}, {"expected", "positive"}});
  // (iv) exact sweep over |b| <= y
  add_checked(cert, "grid_sweep",
              {{"kind", "poly_grid_sign"},
               {"poly", kT1},
               {"grid", {{"b_lo", "-10"}, {"b_hi", "10"}, {"b_steps", 81}, {"delta_hi", "10"}, {"delta_steps", 41}}},
               {"expected_sign", -1}});
  cert.notes.push_back(
      "The maximum of T1 over y is b^2(b^2-8)^3/(8(1+b^2)). The printed value b^2(b^2-8)/(8(1+b^2)) agrees with it "
      "only for b^2 in {0, 7, 8, 9}; both have the sign of b^2-8, so the case analysis is unaffected.");
  cert.finalize();
  return cert;
}

// ------------------------------------------------------------ T2

LemmaCertificate verify_T2_case(const std::vector<Rational>& b_samples_in) {
  LemmaCertificate cert;
  cert.lemma_id = "t2";
  const std::vector<Rational> b_samples =
      b_samples_in.empty() ? std::vector<Rational>{Rational(2), Rational(3), Rational(5, 2), Rational(7, 4),
                                                   Rational(3, 2), Rational(10)}
                           : b_samples_in;
  const std::string t2_in_Y = printed::t2().substitute_square("y", "Y").to_string();
  add_checked(cert, "vanishing_locus",
              {{"kind", "fraction_substitution"}, {"poly", t2_in_Y}, {"var", "Y"}, {"num", "(b^2-2)*(b^2+1)^2"},
               {"den", "(b^2-1)^2"}, {"expected", "0"}});
  add_checked(cert, "b_squared_one",
              {{"kind", "substitution"}, {"poly", kT2}, {"var", "b"}, {"value", "1"}, {"expected", "-4"}});
  add_checked(cert, "b_squared_one_negative",
              {{"kind", "substitution"}, {"poly", kT2}, {"var", "b"}, {"value", "-1"}, {"expected", "-4"}});
  add_checked(cert, "b_squared_two_gives_y_zero",
              {{"kind", "substitution"}, {"poly", "(B2-2)*(B2+1)^2"}, {"var", "B2"}, {"value", "2"}, {"expected", "0"}});

  const MultiPoly P = detail::printed_P().reassemble();
  const MultiPoly dP = P.derivative("x");
  for (const Rational& b : b_samples) {
    if (b.sign() <= 0 || b * b <= Rational(2)) throw DomainError("T2 samples need b > sqrt(2)");
    const Rational d = b * b - Rational(2);
    const Rational yc = (b * b + Rational(1)) / (b * b - Rational(1));
    const std::map<std::string, QuadExt> point = {
        {"x", QuadExt(d, Rational(0), b)}, {"y", QuadExt(d, Rational(0), yc)}, {"b", QuadExt(b)}};
    const json pj = qext_point_json(point);
    const std::string tag = "_b" + b.to_string();
    add_checked(cert, "locus_point_on_T2" + tag,
                {{"kind", "qext_eval"}, {"poly", kT2}, {"point", pj}, {"expected", QuadExt(Rational(0)).to_json()}});
    add_checked(cert, "P_vanishes" + tag,
                {{"kind", "qext_eval"}, {"poly", P.to_string()}, {"point", pj},
                 {"expected", QuadExt(Rational(0)).to_json()}});
    add_checked(cert, "dP_dx_vanishes" + tag,
                {{"kind", "qext_eval"}, {"poly", dP.to_string()}, {"point", pj},
                 {"expected", QuadExt(Rational(0)).to_json()}});
    add_checked(cert, "lhs_numerator_zero" + tag,
                {{"kind", "radical_sum"}, {"linear", "x - b*y - b^2"}, {"radicand", kASq}, {"point", pj},
                 {"expected_sign", "zero"}});
    // printed: -2 b (2 sqrt(d) - b^3 + b) / (b^2 - 1)
    const Rational k = Rational(-2) * b / (b * b - Rational(1));
    const QuadExt expected(d, k * (b - b * b * b), k * Rational(2));
    add_checked(cert, "rhs_numerator_positive" + tag,
                {{"kind", "radical_sum"}, {"linear", "x - b*y + b^2"}, {"radicand", kBSq}, {"point", pj},
                 {"expected_sign", "positive"}, {"expected_value", expected.to_json()}});
  }
  cert.finalize();
  return cert;
}

T2SpecialPoint t2_special_point(const Rational& b) {
  if (b.sign() <= 0 || b * b <= Rational(2)) throw DomainError("T2 point needs b > sqrt(2)");
  const Rational d = b * b - Rational(2);
  T2SpecialPoint p{b, QuadExt(d, Rational(0), b), QuadExt(d, Rational(0), (b * b + Rational(1)) / (b * b - Rational(1))),
                   QuadExt(), QuadExt()};
  const std::map<std::string, QuadExt> point = {{"x", p.x}, {"y", p.y}, {"b", QuadExt(b)}};
  // Both radicands are perfect squares on the locus, so A = |x - by - b^2|
  // and B = |x - by + b^2|.
  auto numerator = [&](const char* linear, const char* radicand) {
    const QuadExt lin = evaluate_in_extension(poly(linear), point);
    if (!(lin * lin == evaluate_in_extension(poly(radicand), point))) {
      throw DomainError("radicand is not a square at the T2 point");
    }
    const Sign s = certify_sign(lin.to_expr());
    if (s == Sign::kUndecided) throw DomainError("sign of the linear part undecided");
    return s == Sign::kPositive ? lin + lin : QuadExt(Rational(0));
  };
  p.lhs_numerator = numerator("x - b*y - b^2", kASq);
  p.rhs_numerator = numerator("x - b*y + b^2", kBSq);
  return p;
}

// ------------------------------------------------------------ asymptotics

ReducedMainSides reduced_main_sides(double x, double y, double b) {
  const auto s = detail::reduced_main(x, y, b);
  return {s.lhs, s.rhs, s.lhs - s.rhs};
}

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

Big big(const Rational& q) { return Big(q.numerator().to_string()) / Big(q.denominator().to_string()); }

Big f_big(const Big& x, const Big& y, const Big& b) {
  const auto s = detail::reduced_main(x, y, b);
  return s.lhs - s.rhs;
}

}  // namespace

LemmaCertificate verify_asymptotics(const Rational& b_q, const Rational& y_q) {
  if (b_q.abs() > y_q) throw DomainError("asymptotics require |b| <= y");
  LemmaCertificate cert;
  cert.lemma_id = "asymptotics";
  const Big b = big(b_q), y = big(y_q);
  const json at = {{"b", rat(b_q)}, {"y", rat(y_q)}};
  if (b_q.is_zero()) {
    json samples = json::array();
    for (double x : {-1e8, -1e6, -1e4, -1e2, -1.0, 0.0, 1.0, 1e2, 1e4, 1e6, 1e8}) {
      samples.push_back({{"x", x}, {"value", static_cast<double>(f_big(Big(x), y, b))}});
    }
    add_checked(cert, "b_zero_negative", {{"kind", "numeric_negative"}, {"at", at}, {"samples", samples}});
    cert.finalize();
    return cert;
  }
  using boost::multiprecision::sqrt;
  const Big limit_pos = -b * b * sqrt(Big(2));
  json pos = json::array();
  for (double x : {1e4, 1e6, 1e8}) {
    const Big f = f_big(Big(x), y, b);
    pos.push_back({{"x", x}, {"value", static_cast<double>(f)}, {"ratio", static_cast<double>(f * sqrt(Big(x)))}});
  }
  add_checked(cert, "positive_infinity",
              {{"kind", "numeric_limit"}, {"at", at}, {"limit", static_cast<double>(limit_pos)}, {"rel_tol", 0.01},
               {"samples", pos}});

  const Big one(1);
  const Big qp = one + (y + b) * (y + b), qm = one + (y - b) * (y - b);
  const Big limit_neg = -sqrt(Big(2)) *
                        ((one + b * b + b * y) * sqrt(qm) + (one + b * b - b * y) * sqrt(qp)) / sqrt(qp * qm);
  json neg = json::array();
  for (double x : {-1e4, -1e6, -1e8}) {
    const Big f = f_big(Big(x), y, b);
    neg.push_back({{"x", x}, {"value", static_cast<double>(f)}, {"ratio", static_cast<double>(f / sqrt(Big(-x)))}});
  }
  add_checked(cert, "negative_infinity",
              {{"kind", "numeric_limit"}, {"at", at}, {"limit", static_cast<double>(limit_neg)}, {"rel_tol", 0.01},
               {"samples", neg}});
  cert.finalize();
  return cert;
}

// ------------------------------------------------------------ elimination

namespace {

constexpr const char* kN = "(x-b*y-b^2+A)^2*(x-1+B) - (x-b*y+b^2+B)^2*(x+1+A)";

json relations_json(const EliminationSystem& s) {
  return {{"a_square", s.a_sq.to_string()}, {"b_square", s.b_sq.to_string()}};
}

// Root of N(x) for fixed (y, b) by certified sign changes and exact
// bisection; nullopt if no sign change is seen on the scan range.
std::optional<std::pair<Rational, Rational>> bracket_root(const json& rel, const std::string& n_text,
                                                          const Rational& y, const Rational& b) {
  auto sign_at = [&](const Rational& x) {
    json ev = rel;
    ev["kind"] = "radical_bracket";
    ev["polys"] = json::array({n_text});
    ev["var"] = "x";
    ev["lo"] = rat(x);
    ev["hi"] = rat(x + Rational(1));
    ev["point"] = {{"y", rat(y)}, {"b", rat(b)}};
    auto r = detail::run_evidence(ev);
    return r.detail["rows"][0]["sign_lo"].get<std::string>();
  };
  std::optional<Rational> lo;
  std::string s_prev = sign_at(Rational(-20));
  for (int k = -79; k <= 80; ++k) {
    const Rational x(k, 4);
    const std::string s = sign_at(x);
    if (s != s_prev && s != "undecided" && s_prev != "undecided") {
      lo = x - Rational(1, 4);
      break;
    }
    s_prev = s;
  }
  if (!lo) return std::nullopt;
  Rational a = *lo, c = *lo + Rational(1, 4);
  const std::string s_a = sign_at(a);
  for (int i = 0; i < 40; ++i) {
    const Rational m = (a + c) / Rational(2);
    const std::string s = sign_at(m);
    if (s == "undecided" || s == "zero") break;
    if (s == s_a) a = m;
    else c = m;
  }
  return std::make_pair(a, c);
}

}  // namespace

LemmaCertificate verify_elimination_from_main() {
  LemmaCertificate cert;
  cert.lemma_id = "elimination";
  const EliminationSystem sys = EliminationSystem::printed();
  const auto rel = sys.relations();
  const MultiPoly A = MultiPoly::variable("A"), B = MultiPoly::variable("B");
  const MultiPoly e1 = sys.c_a * A + sys.c_b * B + sys.c_ab * A * B + sys.l;
  const RadicalPoly n_red = RadicalPoly::reduce(poly(kN), rel);
  const RadicalPoly e_red = RadicalPoly::reduce(e1, rel);
  const json relj = relations_json(sys);

  add_checked(cert, "main1_already_reduced",
              {{"kind", "identity"}, {"lhs", e_red.to_multi().to_string()}, {"rhs", e1.to_string()}});

  // Cofactor by exact division on each basis coordinate.
  std::optional<MultiPoly> cofactor;
  bool consistent = true;
  json attempts = json::array();
  for (int i = 0; i < 4; ++i) {
    const MultiPoly& ni = n_red.coordinate(i);
    const MultiPoly& ei = e_red.coordinate(i);
    if (ei.is_zero()) {
      consistent &= ni.is_zero();
      attempts.push_back({{"basis", i}, {"divisor_zero", true}, {"dividend_zero", ni.is_zero()}});
      continue;
    }
    auto q = ni.divide_exact(ei);
    attempts.push_back({{"basis", i}, {"quotient", q ? q->to_string() : "none"}});
    if (!q || (cofactor && !(*cofactor == *q))) consistent = false;
    else cofactor = q;
  }
  if (consistent && cofactor && !cofactor->is_zero()) {
    json ev = relj;
    ev["kind"] = "radical_identity";
    ev["lhs"] = kN;
    ev["rhs"] = e1.to_string();
    ev["cofactor"] = cofactor->to_string();
    ev["division_attempts"] = attempts;
    add_checked(cert, "linking_identity", ev);
  } else {
    cert.add("linking_identity", Status::kUndecided,
             {{"kind", "note"},
              {"division_attempts", attempts},
              {"reduced_N", n_red.to_multi().to_string()},
              {"reduced_main1", e_red.to_multi().to_string()}});
  }
  const std::string cof = cofactor ? cofactor->to_string() : "1";

  json ev = relj;
  ev["kind"] = "radical_sign_match";
  ev["lhs"] = kN;
  ev["rhs"] = e1.to_string();
  ev["cofactor"] = cof;
  ev["point"] = {{"x", "1"}, {"y", "2"}, {"b", "1/2"}};
  ev["precision"] = 100;
  add_checked(cert, "numeric_consistency_1_2_half", ev);

  // f has no sign change at (y, b) = (2, 1/2); the bisection runs on N, whose
  // root there is a point where the two sides of the reduced inequality are
  // opposite rather than equal.
  const Rational y(2), b(1, 2);
  auto br = bracket_root(relj, kN, y, b);
  if (br) {
    ev = relj;
    ev["kind"] = "radical_bracket";
    ev["polys"] = json::array({kN, e1.to_string()});
    ev["var"] = "x";
    ev["lo"] = rat(br->first);
    ev["hi"] = rat(br->second);
    ev["point"] = {{"y", "2"}, {"b", "1/2"}};
    ev["precision"] = 100;
    const double xm = ((br->first + br->second) / Rational(2)).to_double();
    const auto sides = reduced_main_sides(xm, 2.0, 0.5);
    ev["reduced_sides_at_root"] = {{"x", xm}, {"lhs", sides.lhs}, {"rhs", sides.rhs}};
    add_checked(cert, "common_root_y2_b_half", ev);
  } else {
    cert.add("common_root_y2_b_half", Status::kUndecided, {{"kind", "note"}, {"reason", "no sign change of N found"}});
  }

  const MultiPoly cof_poly = poly(cof);
  add_checked(cert, "b_zero_loci_agree",
              {{"kind", "identity"},
               {"lhs", n_red.to_multi().substitute("b", Rational(0)).to_string()},
               {"rhs", (cof_poly * e_red.to_multi()).substitute("b", Rational(0)).to_string()}});
  add_checked(cert, "b_zero_P_negative",
              {{"kind", "p_substitution"}, {"var", "b"}, {"value", "0"}, {"expected", kPB0}});
  cert.finalize();
  return cert;
}

}  // namespace cubecert
