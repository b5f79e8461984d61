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

#include "cubecert/numeric.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "cubecert/errors.hpp"

namespace cubecert {

// ---------------------------------------------------------------- ExactInt

ExactInt ExactInt::from_string(std::string_view text) {
  mpz_class v;
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return ExactInt(std::move(v));
}

ExactInt ExactInt::pow(unsigned long k) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), k);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::isqrt() const {
  if (sign() < 0) throw DomainError("isqrt of negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), value_.get_mpz_t());
  return ExactInt(std::move(r));
}

bool ExactInt::is_perfect_square() const {
  return sign() >= 0 && mpz_perfect_square_p(value_.get_mpz_t()) != 0;
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInt(std::move(r));
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw DivisionByZero();
  value_ = mpq_class(num.raw(), den.raw());
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(ExactInt(num), ExactInt(den)) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    return Rational(ExactInt::from_string(s.substr(0, slash)), ExactInt::from_string(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative || (!whole.empty() && whole.front() == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    for (char c : frac) {
      if (c < '0' || c > '9') throw ParseError("bad decimal literal: '" + s + "'");
    }
    ExactInt scale = ExactInt(10).pow(frac.size());
    Rational r(ExactInt::from_string(whole) * scale + ExactInt::from_string(frac), scale);
    return negative ? -r : r;
  }
  return Rational(ExactInt::from_string(s));
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite double");
  mpq_class q(v);
  return Rational(std::move(q));
}

Rational Rational::pow(int k) const {
  if (k < 0) return Rational(1) / pow(-k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(n, d));
}

Rational Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
  return Rational(ExactInt(std::move(r)));
}

Rational Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
  return Rational(ExactInt(std::move(r)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace {

Rational scale_pow2(unsigned bits) { return Rational(ExactInt(2).pow(bits)); }

}  // namespace

Rational round_down(const Rational& q, unsigned bits) {
  if (q.is_integer()) return q;
  Rational s = scale_pow2(bits);
  return (q * s).floor() / s;
}

Rational round_up(const Rational& q, unsigned bits) {
  if (q.is_integer()) return q;
  Rational s = scale_pow2(bits);
  return (q * s).ceil() / s;
}

// ---------------------------------------------------------------- Interval

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi");
}

std::optional<int> Interval::certain_sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  if (lo_.is_zero() && hi_.is_zero()) return 0;
  return std::nullopt;
}

Interval Interval::rounded(unsigned bits) const {
  return Interval(round_down(lo_, bits), round_up(hi_, bits));
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_); }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DivisionByZero();
  Rational one(1);
  return a * Interval(one / b.hi_, one / b.lo_);
}

Interval interval_sqrt(const Interval& v, unsigned precision) {
  if (v.lo().sign() < 0) throw DomainError("sqrt of interval with negative lower bound");
  const unsigned bits = precision + 4;
  const Rational scale(ExactInt(2).pow(bits));
  const Rational scale_sq = scale * scale;

  ExactInt lo_n = (v.lo() * scale_sq).floor().numerator();
  ExactInt lo_s = lo_n.isqrt();

  ExactInt hi_n = (v.hi() * scale_sq).ceil().numerator();
  ExactInt hi_s = hi_n.isqrt();
  if (hi_s * hi_s < hi_n) hi_s = hi_s + ExactInt(1);

  return Interval(Rational(lo_s) / scale, Rational(hi_s) / scale);
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::kNegative: return "negative";
    case Sign::kZero: return "zero";
    case Sign::kPositive: return "positive";
    case Sign::kUndecided: return "undecided";
  }
  return "undecided";
}

// ---------------------------------------------------------------- Expr

struct Expr::Node {
  Kind kind;
  Rational value;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

Expr::Expr(Rational c) : node_(std::make_shared<const Node>(Node{Kind::kConst, std::move(c), nullptr, nullptr})) {}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::constant() const { return node_->value; }
Expr Expr::lhs() const { return Expr(node_->a); }
Expr Expr::rhs() const { return Expr(node_->b); }

namespace {

std::shared_ptr<const Expr::Node> make_node(Expr::Kind k, std::shared_ptr<const Expr::Node> a,
                                            std::shared_ptr<const Expr::Node> b) {
  return std::make_shared<const Expr::Node>(Expr::Node{k, Rational(0), std::move(a), std::move(b)});
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::kAdd, a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::kSub, a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::kMul, a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Kind::kDiv, a.node_, b.node_)); }
Expr Expr::operator-() const { return Expr(make_node(Kind::kNeg, node_, nullptr)); }
Expr sqrt(const Expr& a) { return Expr(make_node(Expr::Kind::kSqrt, a.node_, nullptr)); }

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

void print(const NodePtr& n, std::ostringstream& out) {
  switch (n->kind) {
    case Expr::Kind::kConst:
      out << n->value.to_string();
      return;
    case Expr::Kind::kNeg:
      out << "-(";
      print(n->a, out);
      out << ")";
      return;
    case Expr::Kind::kSqrt:
      out << "sqrt(";
      print(n->a, out);
      out << ")";
      return;
    default: break;
  }
  const char* op = n->kind == Expr::Kind::kAdd ? " + " : n->kind == Expr::Kind::kSub ? " - "
                   : n->kind == Expr::Kind::kMul ? " * " : " / ";
  out << "(";
  print(n->a, out);
  out << op;
  print(n->b, out);
  out << ")";
}

std::optional<Interval> enclose_node(const NodePtr& n, unsigned precision) {
  const unsigned bits = precision + 8;
  switch (n->kind) {
    case Expr::Kind::kConst:
      return Interval(n->value);
    case Expr::Kind::kNeg: {
      auto a = enclose_node(n->a, precision);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Expr::Kind::kSqrt: {
      auto a = enclose_node(n->a, precision);
      if (!a) return std::nullopt;
      if (a->hi().sign() < 0) throw DomainError("sqrt of a provably negative expression");
      Interval clamped(max(a->lo(), Rational(0)), a->hi());
      return interval_sqrt(clamped, bits);
    }
    default: break;
  }
  auto a = enclose_node(n->a, precision);
  if (!a) return std::nullopt;
  auto b = enclose_node(n->b, precision);
  if (!b) return std::nullopt;
  switch (n->kind) {
    case Expr::Kind::kAdd: return (*a + *b).rounded(bits);
    case Expr::Kind::kSub: return (*a - *b).rounded(bits);
    case Expr::Kind::kMul: return (*a * *b).rounded(bits);
    case Expr::Kind::kDiv:
      if (b->contains_zero()) return std::nullopt;
      return (*a / *b).rounded(bits);
    default: return std::nullopt;
  }
}

// sum of coefficient * sqrt(radicand), radicands distinct and square-free
using RadicalSum = std::map<ExactInt, Rational>;

constexpr long kTrialDivisionBound = 100000;

// m = r^2 * s with s square-free; nullopt when m cannot be fully classified.
std::optional<std::pair<ExactInt, ExactInt>> split_square(ExactInt m) {
  ExactInt r(1), s(1);
  for (long p = 2; p <= kTrialDivisionBound; ++p) {
    const ExactInt pp(p);
    if (pp * pp > m) break;
    int count = 0;
    while (mpz_divisible_ui_p(m.raw().get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
      mpz_class q;
      mpz_divexact_ui(q.get_mpz_t(), m.raw().get_mpz_t(), static_cast<unsigned long>(p));
      m = ExactInt(std::move(q));
      ++count;
    }
    if (count > 0) {
      r = r * pp.pow(static_cast<unsigned long>(count / 2));
      if (count % 2 == 1) s = s * pp;
    }
  }
  // m now has no prime factor below the bound; it is 1, a prime, a product of
  // two large primes, or a square of one, as long as m < bound^3.
  if (m == ExactInt(1)) return std::make_pair(r, s);
  if (m.is_perfect_square()) return std::make_pair(r * m.isqrt(), s);
  if (m < ExactInt(kTrialDivisionBound).pow(3)) return std::make_pair(r, s * m);
  return std::nullopt;
}

void accumulate(RadicalSum& sum, const ExactInt& k, const Rational& c) {
  auto [it, inserted] = sum.try_emplace(k, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) sum.erase(it);
}

std::optional<RadicalSum> exact_node(const NodePtr& n) {
  switch (n->kind) {
    case Expr::Kind::kConst: {
      RadicalSum s;
      if (!n->value.is_zero()) s.emplace(ExactInt(1), n->value);
      return s;
    }
    case Expr::Kind::kNeg: {
      auto a = exact_node(n->a);
      if (!a) return std::nullopt;
      for (auto& [k, c] : *a) c = -c;
      return a;
    }
    case Expr::Kind::kSqrt: {
      auto a = exact_node(n->a);
      if (!a) return std::nullopt;
      if (a->empty()) return RadicalSum{};
      if (a->size() != 1 || a->begin()->first != ExactInt(1)) return std::nullopt;
      const Rational& q = a->begin()->second;
      if (q.sign() < 0) throw DomainError("sqrt of a negative rational");
      // sqrt(n/d) = sqrt(n*d)/d
      auto split = split_square(q.numerator() * q.denominator());
      if (!split) return std::nullopt;
      RadicalSum s;
      s.emplace(split->second, Rational(split->first) / Rational(q.denominator()));
      return s;
    }
    default: break;
  }
  auto a = exact_node(n->a);
  if (!a) return std::nullopt;
  auto b = exact_node(n->b);
  if (!b) return std::nullopt;
  switch (n->kind) {
    case Expr::Kind::kAdd:
      for (const auto& [k, c] : *b) accumulate(*a, k, c);
      return a;
    case Expr::Kind::kSub:
      for (const auto& [k, c] : *b) accumulate(*a, k, -c);
      return a;
    case Expr::Kind::kMul: {
      RadicalSum out;
      for (const auto& [ka, ca] : *a) {
        for (const auto& [kb, cb] : *b) {
          // sqrt(ka)*sqrt(kb) = g*sqrt((ka/g)*(kb/g)), g = gcd(ka, kb)
          ExactInt g = gcd(ka, kb);
          mpz_class qa, qb;
          mpz_divexact(qa.get_mpz_t(), ka.raw().get_mpz_t(), g.raw().get_mpz_t());
          mpz_divexact(qb.get_mpz_t(), kb.raw().get_mpz_t(), g.raw().get_mpz_t());
          accumulate(out, ExactInt(mpz_class(qa * qb)), ca * cb * Rational(g));
        }
      }
      return out;
    }
    case Expr::Kind::kDiv: {
      if (b->empty()) throw DivisionByZero();
      if (b->size() != 1) return std::nullopt;
      const auto& [k, c] = *b->begin();
      // a / (c sqrt(k)) = a * sqrt(k) / (c k)
      RadicalSum out;
      const Rational factor = Rational(1) / (c * Rational(k));
      for (const auto& [ka, ca] : *a) {
        ExactInt g = gcd(ka, k);
        mpz_class qa, qk;
        mpz_divexact(qa.get_mpz_t(), ka.raw().get_mpz_t(), g.raw().get_mpz_t());
        mpz_divexact(qk.get_mpz_t(), k.raw().get_mpz_t(), g.raw().get_mpz_t());
        accumulate(out, ExactInt(mpz_class(qa * qk)), ca * factor * Rational(g));
      }
      return out;
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::ostringstream out;
  print(node_, out);
  return out.str();
}

std::optional<Interval> Expr::enclose(unsigned precision) const { return enclose_node(node_, precision); }

std::optional<std::vector<Expr::RadicalTerm>> Expr::exact_value() const {
  auto sum = exact_node(node_);
  if (!sum) return std::nullopt;
  std::vector<RadicalTerm> out;
  out.reserve(sum->size());
  for (auto& [k, c] : *sum) out.push_back({k, c});
  return out;
}

Sign certify_sign(const Expr& e, std::span<const unsigned> precision_schedule) {
  if (auto exact = e.exact_value()) {
    if (exact->empty()) return Sign::kZero;
    if (exact->size() == 1) return exact->front().coefficient.sign() < 0 ? Sign::kNegative : Sign::kPositive;
  }
  for (unsigned precision : precision_schedule) {
    auto iv = e.enclose(precision);
    if (!iv) continue;
    if (iv->lo().sign() > 0) return Sign::kPositive;
    if (iv->hi().sign() < 0) return Sign::kNegative;
  }
  return Sign::kUndecided;
}

}  // namespace cubecert
