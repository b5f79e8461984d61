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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubecert {

// Arbitrary-precision signed integer.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}
  static ExactInt from_string(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  ExactInt abs() const { return ExactInt(mpz_class(::abs(value_))); }
  ExactInt pow(unsigned long k) const;
  // floor(sqrt(*this)); requires *this >= 0.
  ExactInt isqrt() const;
  bool is_perfect_square() const;
  bool fits_long() const { return value_.fits_slong_p(); }
  long to_long() const { return value_.get_si(); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  const mpz_class& raw() const { return value_; }

  friend ExactInt operator+(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.value_ + b.value_)); }
  friend ExactInt operator-(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.value_ - b.value_)); }
  friend ExactInt operator*(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.value_ * b.value_)); }
  ExactInt operator-() const { return ExactInt(mpz_class(-value_)); }
  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) <=> 0; }

 private:
  mpz_class value_;
};

ExactInt gcd(const ExactInt& a, const ExactInt& b);

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const ExactInt& v) : value_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  // Throws DivisionByZero when den == 0.
  Rational(const ExactInt& num, const ExactInt& den);
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Accepts "p", "p/q" and decimal "d.ddd" forms.
  static Rational from_string(std::string_view text);
  // Exact binary value of a finite double.
  static Rational from_double(double v);

  ExactInt numerator() const { return ExactInt(mpz_class(value_.get_num())); }
  ExactInt denominator() const { return ExactInt(mpz_class(value_.get_den())); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational pow(int k) const;
  Rational floor() const;
  Rational ceil() const;
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <=> 0; }

 private:
  mpq_class value_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Largest multiple of 2^-bits that is <= q, and smallest that is >= q.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

// Closed interval with rational endpoints. All operations enclose the exact
// result of the operation applied to every pair of points.
class Interval {
 public:
  Interval() = default;
  explicit Interval(Rational point) : lo_(point), hi_(std::move(point)) {}
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains_zero() const { return contains(Rational(0)); }
  // -1 or +1 when the interval excludes zero, 0 for the point interval [0, 0],
  // nullopt otherwise.
  std::optional<int> certain_sign() const;
  // Outward rounding of both endpoints onto the 2^-bits grid.
  Interval rounded(unsigned bits) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws DivisionByZero when b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const { return Interval(-hi_, -lo_); }

 private:
  Rational lo_;
  Rational hi_;
};

// Encloses sqrt of every point of v. Endpoints lie on the 2^-precision grid,
// so a point input yields width <= 2^-precision. Throws DomainError if
// v.lo() < 0.
Interval interval_sqrt(const Interval& v, unsigned precision);

enum class Sign { kNegative, kZero, kPositive, kUndecided };
std::string_view to_string(Sign s);

// Expression over rational constants with + - * / and sqrt. Immutable and
// cheap to copy (shared nodes).
class Expr {
 public:
  enum class Kind { kConst, kAdd, kSub, kMul, kDiv, kNeg, kSqrt };

  Expr(Rational c);  // NOLINT(google-explicit-constructor)
  Expr(long c) : Expr(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  Kind kind() const;
  const Rational& constant() const;
  Expr lhs() const;
  Expr rhs() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;
  friend Expr sqrt(const Expr& a);

  std::string to_string() const;

  // Enclosure at the given precision; nullopt if some divisor interval
  // contains zero. Throws DomainError for sqrt of a provably negative value.
  std::optional<Interval> enclose(unsigned precision) const;

  // Exact value as sum of c_k * sqrt(k) over distinct square-free integers k,
  // when the expression stays inside that representation. The key 1 holds
  // the rational part.
  struct RadicalTerm {
    ExactInt radicand;
    Rational coefficient;
  };
  std::optional<std::vector<RadicalTerm>> exact_value() const;

  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const Node> node_;
};

inline constexpr unsigned kDefaultSchedule[] = {16, 64, 256, 1024};

// Sign of e. Zero is only reported from exact evaluation; otherwise a sign is
// returned as soon as an enclosure excludes zero.
Sign certify_sign(const Expr& e, std::span<const unsigned> precision_schedule = kDefaultSchedule);

}  // namespace cubecert
