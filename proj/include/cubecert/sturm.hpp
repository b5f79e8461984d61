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

#include <optional>
#include <vector>

#include "cubecert/numeric.hpp"
#include "cubecert/poly.hpp"

namespace cubecert {

// An endpoint of a root-counting interval; nullopt stands for -inf on the
// left and +inf on the right.
using Endpoint = std::optional<Rational>;

// p / gcd(p, p'). Throws DomainError for p == 0.
UniPoly square_free_part(const UniPoly& p);

// Sturm sequence g0 = square-free part of p, g1 = g0', g_{i+1} = -rem(g_{i-1}, g_i).
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  const std::vector<UniPoly>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  const UniPoly& base() const { return polys_.front(); }

  // Signs of every chain member at t (nullopt: +inf for right == true,
  // -inf otherwise). Signs at infinity come from leading coefficients.
  std::vector<int> signs_at(const Endpoint& t, bool right) const;
  // Number of sign changes, zeros dropped.
  int variations(const Endpoint& t, bool right) const;

 private:
  std::vector<UniPoly> polys_;
};

SturmChain build_chain(const UniPoly& p);

struct RootCount {
  Endpoint lo;  // exclusive
  Endpoint hi;  // inclusive
  int count = 0;
  int variations_lo = 0;
  int variations_hi = 0;
  // Set when an endpoint was a root of g0 and was moved by a rational
  // epsilon; the count then still refers to (lo, hi].
  std::optional<Rational> perturbed_lo;
  std::optional<Rational> perturbed_hi;
};

// Distinct real roots in (lo, hi]. Throws RootCountError if lo >= hi or if an
// endpoint is a root of g0.
RootCount count_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi);

// Same as count_roots, but an endpoint that is a root is moved to a nearby
// rational point with no other root in between; the move is recorded.
RootCount count_roots_perturbed(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi);

struct IsolatingInterval {
  Rational lo;  // exclusive
  Rational hi;  // inclusive
};

// Refines (lo, hi] holding exactly one root down to width <= width by exact
// bisection. Throws RootCountError when (lo, hi] does not hold exactly one
// root.
IsolatingInterval isolate_root(const SturmChain& chain, const Rational& lo, const Rational& hi,
                               const Rational& width);

}  // namespace cubecert
