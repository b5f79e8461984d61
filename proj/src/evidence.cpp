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

#include "evidence.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "cubecert/errors.hpp"
#include "cubecert/sturm.hpp"

namespace cubecert {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kVerified: return "verified";
    case Status::kRefuted: return "refuted";
    case Status::kUndecided: return "undecided";
  }
  return "undecided";
}

Status status_from_string(std::string_view s) {
  if (s == "verified") return Status::kVerified;
  if (s == "refuted") return Status::kRefuted;
  if (s == "undecided") return Status::kUndecided;
  throw ParseError("unknown status '" + std::string(s) + "'");
}

void LemmaCertificate::add(std::string name, Status s, json evidence) {
  claims.push_back({std::move(name), s, std::move(evidence)});
}

void LemmaCertificate::finalize() {
  bool any_refuted = false, any_undecided = claims.empty();
  for (const auto& c : claims) {
    any_refuted |= c.status == Status::kRefuted;
    any_undecided |= c.status == Status::kUndecided;
  }
  status = any_refuted ? Status::kRefuted : any_undecided ? Status::kUndecided : Status::kVerified;
}

json LemmaCertificate::to_json() const {
  json j;
  j["lemma_id"] = lemma_id;
  j["status"] = std::string(to_string(status));
  j["claims"] = json::array();
  for (const auto& c : claims) {
    j["claims"].push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"evidence", c.evidence}});
  }
  j["notes"] = notes;
  return j;
}

LemmaCertificate LemmaCertificate::from_json(const json& j) {
  try {
    LemmaCertificate c;
    c.lemma_id = j.at("lemma_id").get<std::string>();
    c.status = status_from_string(j.at("status").get<std::string>());
    for (const auto& cl : j.at("claims")) {
      c.claims.push_back({cl.at("name").get<std::string>(), status_from_string(cl.at("status").get<std::string>()),
                          cl.at("evidence")});
    }
    if (j.contains("notes")) c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<std::string> revalidate(const LemmaCertificate& cert) {
  std::vector<std::string> failed;
  for (const auto& c : cert.claims) {
    if (c.status != Status::kVerified) continue;
    json ev = c.evidence;
    ev.erase("result");
    bool ok = false;
    try {
      ok = detail::run_evidence(ev).status == Status::kVerified;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) failed.push_back(c.name);
  }
  return failed;
}

// ------------------------------------------------------------ QuadExt

namespace {

Rational common_radicand(const QuadExt& a, const QuadExt& b) {
  if (a.v.is_zero()) return b.v.is_zero() ? max(a.d, b.d) : b.d;
  if (!b.v.is_zero() && a.d != b.d) throw DomainError("quadratic extensions with different radicands");
  return a.d;
}

}  // namespace

QuadExt operator+(const QuadExt& a, const QuadExt& b) { return QuadExt(common_radicand(a, b), a.u + b.u, a.v + b.v); }
QuadExt operator-(const QuadExt& a, const QuadExt& b) { return QuadExt(common_radicand(a, b), a.u - b.u, a.v - b.v); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  const Rational d = common_radicand(a, b);
  return QuadExt(d, a.u * b.u + a.v * b.v * d, a.u * b.v + a.v * b.u);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  const Rational d = common_radicand(a, b);
  const Rational norm = b.u * b.u - b.v * b.v * d;
  if (norm.is_zero()) throw DivisionByZero();
  const QuadExt conj(d, b.u / norm, -b.v / norm);
  return a * conj;
}

Expr QuadExt::to_expr() const {
  if (v.is_zero()) return Expr(u);
  return Expr(u) + Expr(v) * sqrt(Expr(d));
}

std::string QuadExt::to_string() const {
  if (v.is_zero()) return u.to_string();
  return u.to_string() + " + " + v.to_string() + "*sqrt(" + d.to_string() + ")";
}

json QuadExt::to_json() const { return {{"d", d.to_string()}, {"u", u.to_string()}, {"v", v.to_string()}}; }

QuadExt QuadExt::from_json(const json& j) {
  try {
    return QuadExt(Rational::from_string(j.at("d").get<std::string>()), Rational::from_string(j.at("u").get<std::string>()),
                   Rational::from_string(j.at("v").get<std::string>()));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed quadratic-extension value: ") + e.what());
  }
}

QuadExt evaluate_in_extension(const MultiPoly& p, const std::map<std::string, QuadExt>& point) {
  return p.evaluate_in<QuadExt>([&](const std::string& name) {
    auto it = point.find(name);
    if (it == point.end()) throw DomainError("unbound variable '" + name + "'");
    return it->second;
  });
}

namespace detail {

json point_json(const std::map<std::string, Rational>& point) {
  json j = json::object();
  for (const auto& [k, v] : point) j[k] = v.to_string();
  return j;
}

std::map<std::string, Rational> point_from_json(const json& j) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, Rational::from_string(v.get<std::string>()));
  return out;
}

// ------------------------------------------------------------ Expr parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Expr sum() {
    Expr e = product();
    for (;;) {
      if (eat('+')) e = e + product();
      else if (eat('-')) e = e - product();
      else return e;
    }
  }
  Expr product() {
    Expr e = unary();
    for (;;) {
      if (eat('*')) e = e * unary();
      else if (eat('/')) e = e / unary();
      else return e;
    }
  }
  Expr unary() {
    if (eat('-')) {
      skip();
      // "-5" is a negative literal, "-(...)" a negation
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Expr(-number());
      return -unary();
    }
    return primary();
  }
  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("number expected");
    return Rational::from_string(s_.substr(start, pos_ - start));
  }
  Expr primary() {
    skip();
    if (eat('(')) {
      Expr e = sum();
      if (!eat(')')) fail("')' expected");
      return e;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("'(' expected after sqrt");
      Expr e = sum();
      if (!eat(')')) fail("')' expected");
      return sqrt(e);
    }
    return Expr(number());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

const CubicInX& printed_P() {
  static const CubicInX p = build_P();
  return p;
}

// ------------------------------------------------------------ checkers

namespace {

using Checker = std::function<CheckResult(const json&)>;

MultiPoly poly_at(const json& ev, const char* key) { return parse_poly(ev.at(key).get<std::string>()); }
Rational rat_at(const json& ev, const char* key) { return Rational::from_string(ev.at(key).get<std::string>()); }

Endpoint endpoint_at(const json& ev, const char* key) {
  if (!ev.contains(key) || ev.at(key).is_null()) return std::nullopt;
  return rat_at(ev, key);
}

json endpoint_json(const Endpoint& e) { return e ? json(e->to_string()) : json(nullptr); }

CheckResult from_bool(bool ok, json detail = json::object()) {
  return {ok ? Status::kVerified : Status::kRefuted, std::move(detail)};
}

json residual_detail(const MultiPoly& lhs, const MultiPoly& rhs) {
  const MultiPoly r = lhs - rhs;
  json d = {{"residual_terms", r.term_count()}};
  if (!r.is_zero()) d["residual"] = r.to_string();
  return d;
}

CheckResult compare(const MultiPoly& lhs, const MultiPoly& rhs) { return from_bool(lhs == rhs, residual_detail(lhs, rhs)); }

// Univariate view of ev["poly"] in ev["var"] after substituting an optional
// parameter {"param": name, "value": q}.
UniPoly univariate(const json& ev, const MultiPoly& p, const std::optional<Rational>& param_value = std::nullopt) {
  MultiPoly q = p;
  if (ev.contains("param")) {
    const Rational v = param_value ? *param_value : rat_at(ev, "value");
    q = q.substitute(ev.at("param").get<std::string>(), v);
  }
  return q.to_univariate(ev.at("var").get<std::string>());
}

json root_count_json(const RootCount& rc) {
  json j = {{"lo", endpoint_json(rc.lo)},
            {"hi", endpoint_json(rc.hi)},
            {"count", rc.count},
            {"variations_lo", rc.variations_lo},
            {"variations_hi", rc.variations_hi}};
  if (rc.perturbed_lo) j["perturbed_lo"] = rc.perturbed_lo->to_string();
  if (rc.perturbed_hi) j["perturbed_hi"] = rc.perturbed_hi->to_string();
  return j;
}

CheckResult check_identity(const json& ev) { return compare(poly_at(ev, "lhs"), poly_at(ev, "rhs")); }

CheckResult check_p_coefficient(const json& ev) {
  const CubicInX& p = printed_P();
  const int k = ev.at("power").get<int>();
  const MultiPoly* c = k == 3 ? &p.a3 : k == 2 ? &p.a2 : k == 1 ? &p.a1 : k == 0 ? &p.a0 : nullptr;
  if (!c) throw ParseError("p_coefficient: power must be 0..3");
  return compare(*c, poly_at(ev, "expected"));
}

CheckResult check_p_substitution(const json& ev) {
  const MultiPoly p = printed_P().reassemble().substitute(ev.at("var").get<std::string>(), rat_at(ev, "value"));
  return compare(p, poly_at(ev, "expected"));
}

MultiPoly expand_factors(const json& ev) {
  MultiPoly f(rat_at(ev, "constant"));
  for (const auto& fac : ev.at("factors")) f *= poly_at(fac, "poly").pow(fac.at("exponent").get<unsigned>());
  return f;
}

CheckResult check_discriminant_identity(const json& ev) {
  const MultiPoly delta = cubic_discriminant(printed_P());
  const MultiPoly f = expand_factors(ev);
  json d = residual_detail(delta, f);
  d["discriminant_terms"] = delta.term_count();
  if (delta == f) return {Status::kVerified, d};
  // A single rational cofactor is reported rather than absorbed.
  if (!delta.is_zero() && !f.is_zero()) {
    const Rational c = delta.terms().begin()->second / f.terms().begin()->second;
    if (delta == f.scaled(c)) d["cofactor"] = c.to_string();
  }
  return {Status::kRefuted, d};
}

CheckResult check_discriminant_point(const json& ev) {
  const auto point = point_from_json(ev.at("point"));
  const CubicInX& p = printed_P();
  CubicInX at{p.a3.evaluate(point), p.a2.evaluate(point), p.a1.evaluate(point), p.a0.evaluate(point)};
  const Rational lhs = *cubic_discriminant(at).as_constant();
  const Rational rhs = expand_factors(ev).evaluate(point);
  return from_bool(lhs == rhs, {{"discriminant", lhs.to_string()}, {"factored", rhs.to_string()}});
}

CheckResult check_root_structure(const json& ev) {
  const CubicInX& p = printed_P();
  json rows = json::array();
  bool ok = true;
  for (const auto& pt : ev.at("points")) {
    const auto point = point_from_json(pt);
    CubicInX at{p.a3.evaluate(point), p.a2.evaluate(point), p.a1.evaluate(point), p.a0.evaluate(point)};
    const Rational delta = *cubic_discriminant(at).as_constant();
    json row = {{"point", pt}, {"discriminant_sign", delta.sign()}};
    if (delta.sign() < 0 && !at.a3.is_zero()) {
      const int n = count_roots(SturmChain(at.reassemble().to_univariate("x")), std::nullopt, std::nullopt).count;
      row["real_roots"] = n;
      ok &= n == 1;
    }
    rows.push_back(row);
  }
  return from_bool(ok, {{"rows", rows}});
}

CheckResult check_fraction_substitution(const json& ev) {
  MultiPoly lhs = poly_at(ev, "poly").substitute_fraction(ev.at("var").get<std::string>(), poly_at(ev, "num"),
                                                            poly_at(ev, "den"));
  if (ev.contains("factor")) lhs *= poly_at(ev, "factor");
  return compare(lhs, poly_at(ev, "expected"));
}

CheckResult check_square_substitution(const json& ev) {
  const MultiPoly lhs =
      poly_at(ev, "poly").substitute_square(ev.at("var").get<std::string>(), ev.at("new_var").get<std::string>());
  return compare(lhs, poly_at(ev, "expected"));
}

CheckResult check_substitution(const json& ev) {
  const MultiPoly lhs = poly_at(ev, "poly").substitute(ev.at("var").get<std::string>(), poly_at(ev, "value"));
  return compare(lhs, poly_at(ev, "expected"));
}

CheckResult check_rational_eval(const json& ev) {
  const Rational v = poly_at(ev, "poly").evaluate(point_from_json(ev.at("point")));
  return from_bool(v == rat_at(ev, "expected"), {{"value", v.to_string()}});
}

CheckResult check_root_count(const json& ev) {
  const UniPoly u = univariate(ev, poly_at(ev, "poly"));
  const SturmChain chain(u);
  const Endpoint lo = endpoint_at(ev, "lo"), hi = endpoint_at(ev, "hi");
  const RootCount rc = count_roots_perturbed(chain, lo, hi);
  json d = root_count_json(rc);
  d["chain_length"] = chain.size();
  bool ok = rc.count == ev.at("expected").get<int>();
  // The claim is about [lo, hi]: lo itself must not be a root.
  if (ev.value("closed_lo", false) && lo) {
    const int s = u.sign_at(*lo);
    d["sign_at_lo"] = s;
    ok &= s != 0;
  }
  return from_bool(ok, d);
}

CheckResult check_root_isolation(const json& ev) {
  const SturmChain chain(univariate(ev, poly_at(ev, "poly")));
  const IsolatingInterval iv = isolate_root(chain, rat_at(ev, "lo"), rat_at(ev, "hi"), rat_at(ev, "width"));
  const int recheck = count_roots_perturbed(chain, iv.lo, iv.hi).count;
  return from_bool(recheck == 1 && iv.hi - iv.lo <= rat_at(ev, "width"),
                   {{"lo", iv.lo.to_string()},
                    {"hi", iv.hi.to_string()},
                    {"lo_approx", iv.lo.to_double()},
                    {"hi_approx", iv.hi.to_double()},
                    {"recount", recheck}});
}

CheckResult check_root_sweep(const json& ev) {
  const MultiPoly p = poly_at(ev, "poly");
  const Endpoint lo = endpoint_at(ev, "lo"), hi = endpoint_at(ev, "hi");
  const int expected = ev.at("expected").get<int>();
  const bool positive_at_lo = ev.value("positive_at_lo", false);
  std::size_t tested = 0;
  std::map<std::size_t, int> chain_lengths;
  for (const auto& s : ev.at("samples")) {
    const Rational b = Rational::from_string(s.get<std::string>());
    const UniPoly u = univariate(ev, p, b);
    const SturmChain chain(u);
    ++chain_lengths[chain.size()];
    if (positive_at_lo && lo && u.sign_at(*lo) <= 0) {
      return {Status::kRefuted, {{"witness", b.to_string()}, {"reason", "not positive at lower endpoint"}}};
    }
    const RootCount rc = count_roots_perturbed(chain, lo, hi);
    if (rc.count != expected) {
      return {Status::kRefuted, {{"witness", b.to_string()}, {"root_count", root_count_json(rc)}}};
    }
    ++tested;
  }
  json lengths = json::object();
  for (const auto& [len, n] : chain_lengths) lengths[std::to_string(len)] = n;
  return from_bool(tested > 0, {{"samples_tested", tested}, {"chain_lengths", lengths}});
}

CheckResult check_chain_length(const json& ev) {
  const SturmChain chain(univariate(ev, poly_at(ev, "poly")));
  json members = json::array();
  for (const auto& g : chain.polys()) members.push_back(g.to_string());
  return from_bool(static_cast<int>(chain.size()) == ev.at("expected").get<int>(),
                   {{"length", chain.size()}, {"chain", members}});
}

CheckResult check_positive_coefficients(const json& ev) {
  const UniPoly u = univariate(ev, poly_at(ev, "poly"));
  bool ok = !u.is_zero();
  for (const auto& c : u.coefficients()) ok &= c.sign() > 0;
  return from_bool(ok, {{"polynomial", u.to_string()}});
}

CheckResult check_sturm_printed(const json& ev) {
  const Rational b = rat_at(ev, "value");
  const std::string param = ev.at("param").get<std::string>();
  const SturmChain chain(univariate(ev, poly_at(ev, "poly")));
  const auto& at0 = ev.at("at0");
  const auto& lead = ev.at("lead_sign");
  json rows = json::array();
  bool ok = chain.size() == at0.size() && chain.size() == lead.size();
  for (std::size_t i = 0; ok && i < chain.size(); ++i) {
    const UniPoly& g = chain.polys()[i];
    const std::map<std::string, Rational> point = {{param, b}};
    const Rational printed0 = poly_at(at0[i], "num").evaluate(point) / poly_at(at0[i], "den").evaluate(point);
    const Rational printed_lead = parse_poly(lead[i].get<std::string>()).evaluate(point);
    const Rational value0 = g.evaluate(Rational(0));
    const bool match0 = value0 == printed0;
    const bool match_lead = g.leading().sign() == printed_lead.sign();
    rows.push_back({{"index", i},
                    {"value_at_0", value0.to_string()},
                    {"printed_at_0", printed0.to_string()},
                    {"leading", g.leading().to_string()},
                    {"printed_leading_sign", printed_lead.sign()},
                    {"match", match0 && match_lead}});
    ok &= match0 && match_lead;
  }
  return from_bool(ok, {{"chain_length", chain.size()}, {"rows", rows}});
}

CheckResult check_sign_values(const json& ev) {
  bool ok = true;
  json rows = json::array();
  for (const auto& item : ev.at("items")) {
    const UniPoly u = univariate(item, poly_at(item, "poly"));
    int s;
    const auto& at = item.at("at");
    if (at.is_string() && at.get<std::string>() == "+inf") s = u.sign_at_pos_infinity();
    else if (at.is_string() && at.get<std::string>() == "-inf") s = u.sign_at_neg_infinity();
    else s = u.sign_at(Rational::from_string(at.get<std::string>()));
    ok &= s == item.at("expected").get<int>();
    rows.push_back({{"at", at}, {"sign", s}});
  }
  return from_bool(ok, {{"rows", rows}});
}

Sign sign_from_string(const std::string& s) {
  if (s == "negative") return Sign::kNegative;
  if (s == "zero") return Sign::kZero;
  if (s == "positive") return Sign::kPositive;
  throw ParseError("unknown sign '" + s + "'");
}

CheckResult check_sign(const json& ev) {
  const Expr e = parse_expr(ev.at("expr").get<std::string>());
  const Sign s = certify_sign(e);
  json d = {{"sign", std::string(to_string(s))}};
  if (auto iv = e.enclose(64)) d["approx"] = iv->midpoint().to_double();
  if (s == Sign::kUndecided) return {Status::kUndecided, d};
  return from_bool(s == sign_from_string(ev.at("expected").get<std::string>()), d);
}

std::map<std::string, QuadExt> qext_point(const json& j) {
  std::map<std::string, QuadExt> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, QuadExt::from_json(v));
  return out;
}

CheckResult check_qext_eval(const json& ev) {
  const QuadExt v = evaluate_in_extension(poly_at(ev, "poly"), qext_point(ev.at("point")));
  const QuadExt expected = QuadExt::from_json(ev.at("expected"));
  return from_bool(v == expected, {{"value", v.to_string()}});
}

// lin + sqrt(rad) where rad == lin^2 exactly, so the value is lin + |lin|.
CheckResult check_radical_sum(const json& ev) {
  const auto point = qext_point(ev.at("point"));
  const QuadExt lin = evaluate_in_extension(poly_at(ev, "linear"), point);
  const QuadExt rad = evaluate_in_extension(poly_at(ev, "radicand"), point);
  json d = {{"linear", lin.to_string()}, {"radicand", rad.to_string()}};
  if (!(lin * lin == rad)) {
    d["reason"] = "radicand is not the square of the linear part";
    return {Status::kRefuted, d};
  }
  const Sign lin_sign = certify_sign(lin.to_expr());
  d["linear_sign"] = std::string(to_string(lin_sign));
  if (lin_sign == Sign::kUndecided) return {Status::kUndecided, d};
  const QuadExt value = lin_sign == Sign::kPositive ? lin + lin : QuadExt(Rational(0));
  const Sign value_sign = certify_sign(value.to_expr());
  d["value"] = value.to_string();
  d["value_sign"] = std::string(to_string(value_sign));
  if (auto iv = value.to_expr().enclose(64)) d["value_approx"] = iv->midpoint().to_double();
  bool ok = value_sign == sign_from_string(ev.at("expected_sign").get<std::string>());
  if (ev.contains("expected_value")) ok &= value == QuadExt::from_json(ev.at("expected_value"));
  return from_bool(ok, d);
}

RadicalPoly::RelationsPtr relations_from(const json& ev) {
  auto r = std::make_shared<RadicalPoly::Relations>();
  r->a_square = poly_at(ev, "a_square");
  r->b_square = poly_at(ev, "b_square");
  return r;
}

CheckResult check_radical_identity(const json& ev) {
  const auto rel = relations_from(ev);
  const RadicalPoly lhs = RadicalPoly::reduce(poly_at(ev, "lhs"), rel);
  const RadicalPoly rhs = RadicalPoly::reduce(poly_at(ev, "rhs"), rel);
  const RadicalPoly scaled = RadicalPoly::reduce(poly_at(ev, "cofactor"), rel) * rhs;
  return from_bool(lhs == scaled, residual_detail(lhs.to_multi(), scaled.to_multi()));
}

// Value of an element of the radical ring at a rational point, as an
// expression tree in sqrt(A^2), sqrt(B^2).
Expr radical_value(const RadicalPoly& r, const std::map<std::string, Rational>& point) {
  const Rational a2 = r.relations().a_square.evaluate(point);
  const Rational b2 = r.relations().b_square.evaluate(point);
  const Expr a = sqrt(Expr(a2)), b = sqrt(Expr(b2));
  return Expr(r.one().evaluate(point)) + Expr(r.a().evaluate(point)) * a + Expr(r.b().evaluate(point)) * b +
         Expr(r.ab().evaluate(point)) * a * b;
}

CheckResult check_radical_sign_match(const json& ev) {
  const auto rel = relations_from(ev);
  const auto point = point_from_json(ev.at("point"));
  const RadicalPoly lhs = RadicalPoly::reduce(poly_at(ev, "lhs"), rel);
  const RadicalPoly rhs = RadicalPoly::reduce(poly_at(ev, "rhs") * poly_at(ev, "cofactor"), rel);
  const unsigned precision = ev.value("precision", 100u);
  const unsigned schedule[] = {precision};
  const Sign sl = certify_sign(radical_value(lhs, point), schedule);
  const Sign sr = certify_sign(radical_value(rhs, point), schedule);
  json d = {{"lhs_sign", std::string(to_string(sl))}, {"rhs_sign", std::string(to_string(sr))}};
  if (auto iv = radical_value(lhs, point).enclose(precision)) d["lhs_approx"] = iv->midpoint().to_double();
  if (auto iv = radical_value(rhs, point).enclose(precision)) d["rhs_approx"] = iv->midpoint().to_double();
  if (sl == Sign::kUndecided || sr == Sign::kUndecided) return {Status::kUndecided, d};
  return from_bool(sl == sr, d);
}

// Each listed polynomial changes sign between x = lo and x = hi, so each
// vanishes somewhere in the bracket.
CheckResult check_radical_bracket(const json& ev) {
  const auto rel = relations_from(ev);
  auto point = point_from_json(ev.at("point"));
  const std::string var = ev.at("var").get<std::string>();
  const Rational lo = rat_at(ev, "lo"), hi = rat_at(ev, "hi");
  const unsigned precision = ev.value("precision", 100u);
  const unsigned schedule[] = {precision};
  json rows = json::array();
  bool ok = lo < hi;
  bool undecided = false;
  for (const auto& text : ev.at("polys")) {
    const RadicalPoly p = RadicalPoly::reduce(parse_poly(text.get<std::string>()), rel);
    point[var] = lo;
    const Sign s_lo = certify_sign(radical_value(p, point), schedule);
    point[var] = hi;
    const Sign s_hi = certify_sign(radical_value(p, point), schedule);
    point[var] = (lo + hi) / Rational(2);
    json row = {{"sign_lo", std::string(to_string(s_lo))}, {"sign_hi", std::string(to_string(s_hi))}};
    if (auto iv = radical_value(p, point).enclose(precision)) {
      row["mid_lo"] = iv->lo().to_double();
      row["mid_hi"] = iv->hi().to_double();
    }
    rows.push_back(row);
    if (s_lo == Sign::kUndecided || s_hi == Sign::kUndecided) undecided = true;
    else ok &= s_lo != Sign::kZero && s_hi != Sign::kZero && s_lo != s_hi;
  }
  json d = {{"rows", rows}, {"width", (hi - lo).to_double()}};
  if (!ok) return {Status::kRefuted, d};
  return {undecided ? Status::kUndecided : Status::kVerified, d};
}

CheckResult check_numeric_limit(const json& ev) {
  const double limit = ev.at("limit").get<double>();
  const double tol = ev.at("rel_tol").get<double>();
  const auto& samples = ev.at("samples");
  if (samples.empty()) return {Status::kUndecided, {}};
  double prev_err = INFINITY;
  bool monotone = true;
  json errs = json::array();
  for (const auto& s : samples) {
    const double err = std::fabs(s.at("ratio").get<double>() - limit);
    // Allow rounding noise once the error is below 1e-12 relative.
    monotone &= err <= prev_err + 1e-12 * std::fabs(limit);
    prev_err = err;
    errs.push_back(err);
  }
  const double last = samples.back().at("ratio").get<double>();
  const bool within = std::fabs(last - limit) <= tol * std::fabs(limit);
  const bool negative = last < 0 && samples.back().at("value").get<double>() < 0;
  return from_bool(within && monotone && negative,
                   {{"errors", errs}, {"within_tolerance", within}, {"errors_nonincreasing", monotone},
                    {"negative", negative}});
}

CheckResult check_numeric_negative(const json& ev) {
  double worst = -INFINITY;
  for (const auto& s : ev.at("samples")) worst = std::max(worst, s.at("value").get<double>());
  return from_bool(worst < 0, {{"max_value", worst}});
}

CheckResult check_poly_grid_sign(const json& ev) {
  const MultiPoly p = poly_at(ev, "poly");
  const auto& g = ev.at("grid");
  const Rational b_lo = rat_at(g, "b_lo"), b_hi = rat_at(g, "b_hi");
  const Rational d_hi = rat_at(g, "delta_hi");
  const int nb = g.at("b_steps").get<int>(), nd = g.at("delta_steps").get<int>();
  const int expected = ev.at("expected_sign").get<int>();
  std::size_t points = 0;
  std::optional<Rational> worst;
  std::map<std::string, Rational> worst_point;
  for (int i = 0; i < nb; ++i) {
    const Rational b = b_lo + (b_hi - b_lo) * Rational(i, nb - 1);
    for (int j = 0; j < nd; ++j) {
      // y ranges over [|b|, |b| + delta_hi]
      const Rational y = b.abs() + d_hi * Rational(j, nd - 1);
      const std::map<std::string, Rational> pt = {{"b", b}, {"y", y}};
      const Rational v = p.evaluate(pt) * Rational(expected);
      ++points;
      if (!worst || v < *worst) {
        worst = v;
        worst_point = pt;
      }
    }
  }
  const bool ok = worst && worst->sign() > 0;
  return from_bool(ok, {{"points", points},
                        {"closest_value", worst ? (*worst * Rational(expected)).to_string() : "none"},
                        {"closest_point", point_json(worst_point)}});
}

const std::unordered_map<std::string, Checker>& checkers() {
  static const std::unordered_map<std::string, Checker> table = {
      {"identity", check_identity},
      {"p_coefficient", check_p_coefficient},
      {"p_substitution", check_p_substitution},
      {"discriminant_identity", check_discriminant_identity},
      {"discriminant_point", check_discriminant_point},
      {"root_structure", check_root_structure},
      {"fraction_substitution", check_fraction_substitution},
      {"square_substitution", check_square_substitution},
      {"substitution", check_substitution},
      {"rational_eval", check_rational_eval},
      {"root_count", check_root_count},
      {"root_isolation", check_root_isolation},
      {"root_sweep", check_root_sweep},
      {"chain_length", check_chain_length},
      {"positive_coefficients", check_positive_coefficients},
      {"sturm_printed", check_sturm_printed},
      {"sign_values", check_sign_values},
      {"sign", check_sign},
      {"qext_eval", check_qext_eval},
      {"radical_sum", check_radical_sum},
      {"radical_identity", check_radical_identity},
      {"radical_sign_match", check_radical_sign_match},
      {"radical_bracket", check_radical_bracket},
      {"numeric_limit", check_numeric_limit},
      {"numeric_negative", check_numeric_negative},
      {"poly_grid_sign", check_poly_grid_sign},
  };
  return table;
}

}  // namespace

CheckResult run_evidence(const json& evidence) {
  const std::string kind = evidence.at("kind").get<std::string>();
  auto it = checkers().find(kind);
  if (it == checkers().end()) throw ParseError("unknown evidence kind '" + kind + "'");
  try {
    return it->second(evidence);
  } catch (const json::exception& e) {
    throw ParseError("malformed '" + kind + "' evidence: " + e.what());
  }
}

void add_checked(LemmaCertificate& cert, const std::string& name, json evidence) {
  CheckResult r;
  try {
    r = run_evidence(evidence);
  } catch (const Error& e) {
    r = {Status::kRefuted, {{"error", e.what()}}};
  }
  evidence["result"] = std::move(r.detail);
  cert.add(name, r.status, std::move(evidence));
}

}  // namespace detail
}  // namespace cubecert
