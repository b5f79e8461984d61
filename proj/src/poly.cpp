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

#include "cubecert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cubecert {

int variable_rank(std::string_view name) {
  static constexpr std::string_view kFixed[] = {"x", "y", "b", "A", "B"};
  for (int i = 0; i < 5; ++i) {
    if (name == kFixed[i]) return i;
  }
  return 5;
}

bool variable_less(std::string_view a, std::string_view b) {
  const int ra = variable_rank(a), rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto ta = std::accumulate(a.begin(), a.end(), 0u);
  const auto tb = std::accumulate(b.begin(), b.end(), 0u);
  if (ta != tb) return ta > tb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ------------------------------------------------------------ MultiPoly

MultiPoly::MultiPoly(Rational c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

MultiPoly MultiPoly::variable(std::string name) {
  MultiPoly p;
  p.variables_.push_back(std::move(name));
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> variables, TermMap terms) {
  MultiPoly p;
  p.variables_ = std::move(variables);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void MultiPoly::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });

  const std::size_t n = variables_.size();
  std::vector<bool> used(n, false);
  for (const auto& [exps, c] : terms_) {
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || exps[i] > 0;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) order.push_back(i);
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return variable_less(variables_[a], variables_[b]); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (variables_[order[i]] == variables_[order[i - 1]]) {
      throw DomainError("duplicate variable '" + variables_[order[i]] + "'");
    }
  }

  bool identity = order.size() == n;
  for (std::size_t i = 0; identity && i < n; ++i) identity = order[i] == i;
  if (identity) return;

  std::vector<std::string> vars;
  for (std::size_t i : order) vars.push_back(variables_[i]);
  TermMap remapped;
  for (auto& [exps, c] : terms_) {
    Exponents e;
    e.reserve(order.size());
    for (std::size_t i : order) e.push_back(exps[i]);
    remapped.emplace(std::move(e), std::move(c));
  }
  variables_ = std::move(vars);
  terms_ = std::move(remapped);
}

std::pair<MultiPoly::TermMap, MultiPoly::TermMap> MultiPoly::aligned(const MultiPoly& a, const MultiPoly& b,
                                                                     std::vector<std::string>& vars_out) {
  vars_out = a.variables_;
  for (const auto& v : b.variables_) {
    if (std::find(vars_out.begin(), vars_out.end(), v) == vars_out.end()) vars_out.push_back(v);
  }
  std::sort(vars_out.begin(), vars_out.end(), [](const auto& l, const auto& r) { return variable_less(l, r); });

  auto remap = [&](const MultiPoly& p) {
    if (p.variables_ == vars_out) return p.terms_;
    std::vector<std::size_t> pos;
    for (const auto& v : p.variables_) {
      pos.push_back(static_cast<std::size_t>(std::find(vars_out.begin(), vars_out.end(), v) - vars_out.begin()));
    }
    TermMap out;
    for (const auto& [exps, c] : p.terms_) {
      Exponents e(vars_out.size(), 0);
      for (std::size_t i = 0; i < exps.size(); ++i) e[pos[i]] = exps[i];
      out.emplace(std::move(e), c);
    }
    return out;
  };
  return {remap(a), remap(b)};
}

bool MultiPoly::has_variable(std::string_view name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (!variables_.empty()) return std::nullopt;
  return terms_.begin()->second;
}

unsigned MultiPoly::degree_in(std::string_view var) const {
  auto it = std::find(variables_.begin(), variables_.end(), var);
  if (it == variables_.end()) return 0;
  const auto idx = static_cast<std::size_t>(it - variables_.begin());
  unsigned d = 0;
  for (const auto& [exps, c] : terms_) d = std::max(d, exps[idx]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  std::vector<std::string> vars;
  auto [lhs, rhs] = aligned(*this, o, vars);
  for (auto& [exps, c] : rhs) {
    auto [it, inserted] = lhs.try_emplace(exps, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) lhs.erase(it);
    }
  }
  variables_ = std::move(vars);
  terms_ = std::move(lhs);
  canonicalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  if (is_zero() || o.is_zero()) {
    *this = MultiPoly();
    return *this;
  }
  std::vector<std::string> vars;
  auto [lhs, rhs] = aligned(*this, o, vars);
  TermMap out;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : lhs) {
    for (const auto& [eb, cb] : rhs) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  variables_ = std::move(vars);
  terms_ = std::move(out);
  canonicalize();
  return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MultiPoly();
  MultiPoly p = *this;
  for (auto& [exps, coeff] : p.terms_) coeff *= c;
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1L), base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  auto it = std::find(variables_.begin(), variables_.end(), var);
  if (it == variables_.end()) return {*this};
  const auto idx = static_cast<std::size_t>(it - variables_.begin());
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i != idx) rest.push_back(variables_[i]);
  }
  std::vector<TermMap> parts(degree_in(var) + 1);
  for (const auto& [exps, c] : terms_) {
    Exponents e;
    e.reserve(rest.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i != idx) e.push_back(exps[i]);
    }
    parts[exps[idx]].emplace(std::move(e), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.push_back(from_terms(rest, std::move(part)));
  return out;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  if (!has_variable(var)) return *this;
  auto coeffs = coefficients_in(var);
  MultiPoly result;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result *= value;
    result += *it;
  }
  return result;
}

MultiPoly MultiPoly::substitute_fraction(std::string_view var, const MultiPoly& num, const MultiPoly& den) const {
  auto coeffs = coefficients_in(var);
  const auto d = static_cast<unsigned>(coeffs.size() - 1);
  MultiPoly result;
  for (unsigned i = 0; i <= d; ++i) {
    if (coeffs[i].is_zero()) continue;
    result += coeffs[i] * num.pow(i) * den.pow(d - i);
  }
  return result;
}

MultiPoly MultiPoly::substitute_square(std::string_view var, std::string_view new_var) const {
  auto it = std::find(variables_.begin(), variables_.end(), var);
  if (it == variables_.end()) return *this;
  if (has_variable(new_var)) throw DomainError("substitute_square: '" + std::string(new_var) + "' already present");
  const auto idx = static_cast<std::size_t>(it - variables_.begin());
  std::vector<std::string> vars = variables_;
  vars[idx] = std::string(new_var);
  TermMap out;
  for (const auto& [exps, c] : terms_) {
    if (exps[idx] % 2 != 0) throw DomainError("odd power of '" + std::string(var) + "' in substitute_square");
    Exponents e = exps;
    e[idx] /= 2;
    out.emplace(std::move(e), c);
  }
  return from_terms(std::move(vars), std::move(out));
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  auto it = std::find(variables_.begin(), variables_.end(), var);
  if (it == variables_.end()) return MultiPoly();
  const auto idx = static_cast<std::size_t>(it - variables_.begin());
  TermMap out;
  for (const auto& [exps, c] : terms_) {
    if (exps[idx] == 0) continue;
    Exponents e = exps;
    e[idx] -= 1;
    out.emplace(std::move(e), c * Rational(static_cast<long>(exps[idx])));
  }
  return from_terms(variables_, std::move(out));
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return MultiPoly();
  std::vector<std::string> vars;
  auto [num, den] = aligned(*this, divisor, vars);
  const auto& [lead_exps, lead_coeff] = *den.begin();

  TermMap quotient;
  while (!num.empty()) {
    const auto& [exps, c] = *num.begin();
    Exponents q(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < lead_exps[i]) return std::nullopt;
      q[i] = exps[i] - lead_exps[i];
    }
    const Rational qc = c / lead_coeff;
    for (const auto& [de, dc] : den) {
      Exponents e(de.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = de[i] + q[i];
      auto [it, inserted] = num.try_emplace(e, -(qc * dc));
      if (!inserted) {
        it->second -= qc * dc;
        if (it->second.is_zero()) num.erase(it);
      }
    }
    quotient.emplace(std::move(q), qc);
  }
  return from_terms(vars, std::move(quotient));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  return evaluate_in<Rational>([&](const std::string& v) {
    auto it = point.find(v);
    if (it == point.end()) throw DomainError("unbound variable '" + v + "'");
    return it->second;
  });
}

UniPoly MultiPoly::to_univariate(std::string_view var) const {
  for (const auto& v : variables_) {
    if (v != var) throw DomainError("to_univariate: polynomial still contains '" + v + "'");
  }
  std::vector<Rational> coeffs(degree_in(var) + 1);
  for (const auto& [exps, c] : terms_) coeffs[exps.empty() ? 0 : exps[0]] = c;
  return UniPoly(std::string(var), std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    if (first) {
      out << c.to_string();
    } else {
      out << (c.sign() < 0 ? " - " : " + ") << c.abs().to_string();
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) out << '*' << variables_[i] << '^' << exps[i];
    }
    first = false;
  }
  return out.str();
}

// ------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept("+")) {
        acc += term();
      } else if (accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      skip_space();
      if (accept("*")) {
        acc *= unary();
      } else if (accept("/")) {
        MultiPoly d = unary();
        auto c = d.as_constant();
        if (!c) fail("division by a non-constant");
        if (c->is_zero()) throw DivisionByZero();
        acc = acc.scaled(Rational(1) / *c);
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept("^") || accept("**")) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return MultiPoly(Rational::from_string(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return MultiPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

// ------------------------------------------------------------ UniPoly

UniPoly::UniPoly(std::string variable, std::vector<Rational> coefficients)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly UniPoly::constant(Rational c, std::string variable) { return UniPoly(std::move(variable), {std::move(c)}); }

UniPoly UniPoly::monomial(Rational c, unsigned degree, std::string variable) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return UniPoly(std::move(variable), std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int UniPoly::sign_at_neg_infinity() const {
  const int s = leading().sign();
  return degree() % 2 == 0 ? s : -s;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return UniPoly(variable_, std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v *= c;
  return UniPoly(variable_, std::move(out));
}

UniPoly UniPoly::monic() const { return is_zero() ? *this : scaled(Rational(1) / leading()); }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(variable_, {}), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational lead = divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(variable_, std::move(quot)), UniPoly(variable_, std::move(rem))};
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.variable_, {});
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.variable_, std::move(out));
}

MultiPoly UniPoly::to_multi() const {
  MultiPoly::TermMap terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) terms.emplace(Exponents{static_cast<std::uint32_t>(k)}, coeffs_[k]);
  }
  return MultiPoly::from_terms({variable_}, std::move(terms));
}

UniPoly poly_derivative(const UniPoly& p) { return p.derivative(); }

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  UniPoly a = p.monic(), b = q.monic();
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ------------------------------------------------------------ RadicalPoly

RadicalPoly::RadicalPoly(RelationsPtr relations) : relations_(std::move(relations)) {}

RadicalPoly::RadicalPoly(RelationsPtr relations, MultiPoly one, MultiPoly a, MultiPoly b, MultiPoly ab)
    : relations_(std::move(relations)), coords_{std::move(one), std::move(a), std::move(b), std::move(ab)} {}

RadicalPoly RadicalPoly::reduce(const MultiPoly& p, RelationsPtr relations) {
  RadicalPoly out(relations);
  const auto& vars = p.variables();
  std::vector<std::string> rest;
  int ia = -1, ib = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == relations->a_name) {
      ia = static_cast<int>(i);
    } else if (vars[i] == relations->b_name) {
      ib = static_cast<int>(i);
    } else {
      rest.push_back(vars[i]);
    }
  }
  std::vector<MultiPoly> a_pows{MultiPoly(1L)}, b_pows{MultiPoly(1L)};
  auto cached = [](std::vector<MultiPoly>& cache, const MultiPoly& base, unsigned k) -> const MultiPoly& {
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };

  std::map<std::pair<unsigned, unsigned>, MultiPoly::TermMap> grouped[4];
  for (const auto& [exps, c] : p.terms()) {
    const unsigned ea = ia >= 0 ? exps[static_cast<std::size_t>(ia)] : 0;
    const unsigned eb = ib >= 0 ? exps[static_cast<std::size_t>(ib)] : 0;
    Exponents e;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (static_cast<int>(i) != ia && static_cast<int>(i) != ib) e.push_back(exps[i]);
    }
    const int basis = static_cast<int>((ea % 2) | ((eb % 2) << 1));
    grouped[basis][{ea / 2, eb / 2}].emplace(std::move(e), c);
  }
  for (int basis = 0; basis < 4; ++basis) {
    MultiPoly acc;
    for (auto& [key, terms] : grouped[basis]) {
      MultiPoly coeff = MultiPoly::from_terms(rest, std::move(terms));
      coeff *= cached(a_pows, relations->a_square, key.first);
      coeff *= cached(b_pows, relations->b_square, key.second);
      acc += coeff;
    }
    out.coords_[basis] = std::move(acc);
  }
  return out;
}

bool RadicalPoly::is_zero() const {
  return std::all_of(std::begin(coords_), std::end(coords_), [](const MultiPoly& p) { return p.is_zero(); });
}

MultiPoly RadicalPoly::to_multi() const {
  const MultiPoly a = MultiPoly::variable(relations_->a_name);
  const MultiPoly b = MultiPoly::variable(relations_->b_name);
  return coords_[0] + coords_[1] * a + coords_[2] * b + coords_[3] * a * b;
}

RadicalPoly operator+(const RadicalPoly& p, const RadicalPoly& q) {
  RadicalPoly out(p.relations_);
  for (int i = 0; i < 4; ++i) out.coords_[i] = p.coords_[i] + q.coords_[i];
  return out;
}

RadicalPoly operator-(const RadicalPoly& p, const RadicalPoly& q) {
  RadicalPoly out(p.relations_);
  for (int i = 0; i < 4; ++i) out.coords_[i] = p.coords_[i] - q.coords_[i];
  return out;
}

RadicalPoly operator*(const RadicalPoly& p, const RadicalPoly& q) {
  RadicalPoly out(p.relations_);
  const auto& rel = *p.relations_;
  for (int i = 0; i < 4; ++i) {
    if (p.coords_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (q.coords_[j].is_zero()) continue;
      MultiPoly term = p.coords_[i] * q.coords_[j];
      const int shared = i & j;
      if (shared & 1) term *= rel.a_square;
      if (shared & 2) term *= rel.b_square;
      out.coords_[i ^ j] += term;
    }
  }
  return out;
}

RadicalPoly radical_reduce(const RadicalPoly& p) {
  auto rel = std::make_shared<const RadicalPoly::Relations>(p.relations());
  return RadicalPoly::reduce(p.to_multi(), rel);
}

// ------------------------------------------------------------ CubicInX

CubicInX CubicInX::collect(const MultiPoly& p, std::string_view var) {
  auto coeffs = p.coefficients_in(var);
  if (coeffs.size() > 4) {
    throw DomainError("polynomial has degree " + std::to_string(coeffs.size() - 1) + " in " + std::string(var));
  }
  coeffs.resize(4);
  return CubicInX{coeffs[3], coeffs[2], coeffs[1], coeffs[0]};
}

MultiPoly CubicInX::reassemble(std::string_view var) const {
  const MultiPoly x = MultiPoly::variable(std::string(var));
  return ((a3 * x + a2) * x + a1) * x + a0;
}

MultiPoly cubic_discriminant(const CubicInX& c) {
  const MultiPoly a1_sq = c.a1 * c.a1;
  const MultiPoly a2_sq = c.a2 * c.a2;
  return (c.a3 * c.a2 * c.a1 * c.a0).scaled(Rational(18)) - (a2_sq * c.a2 * c.a0).scaled(Rational(4)) +
         a2_sq * a1_sq - (c.a3 * a1_sq * c.a1).scaled(Rational(4)) -
         (c.a3 * c.a3 * c.a0 * c.a0).scaled(Rational(27));
}

}  // namespace cubecert
