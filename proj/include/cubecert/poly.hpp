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

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubecert/errors.hpp"
#include "cubecert/numeric.hpp"

namespace cubecert {

class UniPoly;

// Variable ranking used for canonical variable lists: x, y, b, A, B first,
// then any other name in lexicographic order.
int variable_rank(std::string_view name);
bool variable_less(std::string_view a, std::string_view b);

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order on exponent vectors (descending iteration puts
// the highest total degree first).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact multivariate polynomial over Rational in named variables.
//
// Canonical form: variables sorted by variable_rank and restricted to those
// that actually occur, no zero coefficients. Two polynomials are equal iff
// their variable lists and term maps are identical.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(Rational c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(std::string name);
  // Builds from raw terms over the given variables; canonicalizes.
  static MultiPoly from_terms(std::vector<std::string> variables, TermMap terms);

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool has_variable(std::string_view name) const;
  std::optional<Rational> as_constant() const;
  unsigned degree_in(std::string_view var) const;
  unsigned total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned k) const;
  MultiPoly scaled(const Rational& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  // Exact substitution var -> value. A variable that does not occur leaves
  // the polynomial unchanged.
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly substitute(std::string_view var, const Rational& value) const {
    return substitute(var, MultiPoly(value));
  }
  // Numerator of p(var = num/den) times den^deg_var(p); den must be nonzero
  // wherever the identity is used.
  MultiPoly substitute_fraction(std::string_view var, const MultiPoly& num, const MultiPoly& den) const;
  // Replaces var^(2k) by new_var^k. Throws DomainError if an odd power of
  // var occurs.
  MultiPoly substitute_square(std::string_view var, std::string_view new_var) const;

  MultiPoly derivative(std::string_view var) const;

  // Coefficients of p viewed as a polynomial in var (ascending powers).
  std::vector<MultiPoly> coefficients_in(std::string_view var) const;

  // Exact quotient when divisor divides *this; nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  // All variables must be bound.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  // Generic evaluation in any commutative ring T constructible from Rational.
  template <class T>
  T evaluate_in(const std::function<T(const std::string&)>& value_of) const;

  // Univariate view; every variable other than var must be absent.
  UniPoly to_univariate(std::string_view var) const;

  // Canonical text: terms in descending grlex order, each written as
  // coefficient*var^e*..., exponents always explicit. "0" for zero.
  std::string to_string() const;

 private:
  void canonicalize();
  // Rewrites *this and other over the union of both variable lists.
  static std::pair<TermMap, TermMap> aligned(const MultiPoly& a, const MultiPoly& b,
                                              std::vector<std::string>& vars_out);

  std::vector<std::string> variables_;
  TermMap terms_;
};

// Parses +, -, *, / (by constants), ^ (non-negative integer), parentheses,
// integer/decimal/rational literals and identifiers.
MultiPoly parse_poly(std::string_view text);

// Exact univariate polynomial over Rational; coefficients ascending.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::string variable, std::vector<Rational> coefficients);
  static UniPoly constant(Rational c, std::string variable = "t");
  static UniPoly monomial(Rational c, unsigned degree, std::string variable = "t");

  const std::string& variable() const { return variable_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational evaluate(const Rational& t) const;
  int sign_at(const Rational& t) const { return evaluate(t).sign(); }
  int sign_at_pos_infinity() const { return leading().sign(); }
  int sign_at_neg_infinity() const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(const Rational& c) const;
  // Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const { return scaled(Rational(-1)); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  MultiPoly to_multi() const;
  std::string to_string() const { return to_multi().to_string(); }

 private:
  void trim();
  std::string variable_ = "t";
  std::vector<Rational> coeffs_;
};

UniPoly poly_derivative(const UniPoly& p);
// Monic gcd. Throws DomainError when both inputs are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

// Element of R[A, B]/(A^2 - a, B^2 - b) written on the basis {1, A, B, AB}.
class RadicalPoly {
 public:
  struct Relations {
    std::string a_name = "A";
    std::string b_name = "B";
    MultiPoly a_square;
    MultiPoly b_square;
  };
  using RelationsPtr = std::shared_ptr<const Relations>;

  explicit RadicalPoly(RelationsPtr relations);
  RadicalPoly(RelationsPtr relations, MultiPoly one, MultiPoly a, MultiPoly b, MultiPoly ab);

  // Reduces a polynomial that may contain the radical symbols with any
  // exponent onto the basis. Idempotent on already-reduced input.
  static RadicalPoly reduce(const MultiPoly& p, RelationsPtr relations);

  const MultiPoly& coordinate(int basis) const { return coords_[basis]; }
  const MultiPoly& one() const { return coords_[0]; }
  const MultiPoly& a() const { return coords_[1]; }
  const MultiPoly& b() const { return coords_[2]; }
  const MultiPoly& ab() const { return coords_[3]; }
  const Relations& relations() const { return *relations_; }
  bool is_zero() const;

  // Re-expresses the element as a MultiPoly in the radical symbols.
  MultiPoly to_multi() const;

  friend RadicalPoly operator+(const RadicalPoly& p, const RadicalPoly& q);
  friend RadicalPoly operator-(const RadicalPoly& p, const RadicalPoly& q);
  friend RadicalPoly operator*(const RadicalPoly& p, const RadicalPoly& q);
  friend bool operator==(const RadicalPoly& p, const RadicalPoly& q) { return p.coords_ == q.coords_; }

 private:
  RelationsPtr relations_;
  std::array<MultiPoly, 4> coords_;
};

RadicalPoly radical_reduce(const RadicalPoly& p);

// Cubic in x with coefficients in the remaining variables.
struct CubicInX {
  MultiPoly a3, a2, a1, a0;

  // Throws DomainError if p has degree > 3 in var.
  static CubicInX collect(const MultiPoly& p, std::string_view var = "x");
  MultiPoly reassemble(std::string_view var = "x") const;
};

// 18 a3 a2 a1 a0 - 4 a2^3 a0 + a2^2 a1^2 - 4 a3 a1^3 - 27 a3^2 a0^2.
MultiPoly cubic_discriminant(const CubicInX& c);

// ------------------------------------------------------------ templates

template <class T>
T MultiPoly::evaluate_in(const std::function<T(const std::string&)>& value_of) const {
  std::vector<std::vector<T>> powers(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    powers[i].push_back(T(Rational(1)));
    powers[i].push_back(value_of(variables_[i]));
  }
  T total(Rational(0));
  for (const auto& [exps, coeff] : terms_) {
    T term(coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      while (powers[i].size() <= exps[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
      if (exps[i] > 0) term = term * powers[i][exps[i]];
    }
    total = total + term;
  }
  return total;
}

}  // namespace cubecert
