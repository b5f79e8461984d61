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

#include "cubecert/sturm.hpp"

#include "cubecert/errors.hpp"

namespace cubecert {

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  const UniPoly g = poly_gcd(p, p.derivative());
  return p.divmod(g).first;
}

SturmChain::SturmChain(const UniPoly& p) {
  polys_.push_back(square_free_part(p));
  if (polys_.front().degree() == 0) return;
  polys_.push_back(polys_.front().derivative());
  for (;;) {
    const UniPoly& prev = polys_[polys_.size() - 2];
    const UniPoly& cur = polys_.back();
    UniPoly next = -prev.divmod(cur).second;
    if (next.is_zero()) break;
    polys_.push_back(std::move(next));
  }
}

SturmChain build_chain(const UniPoly& p) { return SturmChain(p); }

std::vector<int> SturmChain::signs_at(const Endpoint& t, bool right) const {
  std::vector<int> out;
  out.reserve(polys_.size());
  for (const auto& g : polys_) {
    if (t) {
      out.push_back(g.sign_at(*t));
    } else {
      out.push_back(right ? g.sign_at_pos_infinity() : g.sign_at_neg_infinity());
    }
  }
  return out;
}

int SturmChain::variations(const Endpoint& t, bool right) const {
  int changes = 0, last = 0;
  for (int s : signs_at(t, right)) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

void check_order(const Endpoint& lo, const Endpoint& hi) {
  if (lo && hi && !(*lo < *hi)) throw RootCountError("root counting needs lo < hi");
}

bool is_root(const SturmChain& chain, const Endpoint& t) { return t && chain.base().sign_at(*t) == 0; }

// Smallest tried epsilon = 2^-k such that r is the only root in
// (r - eps, r + eps] and neither r - eps nor r + eps is a root.
Rational isolating_radius(const SturmChain& chain, const Rational& r) {
  Rational eps(1);
  for (int k = 0; k < 4096; ++k, eps = eps / Rational(2)) {
    const Rational a = r - eps, b = r + eps;
    if (chain.base().sign_at(a) == 0 || chain.base().sign_at(b) == 0) continue;
    if (chain.variations(a, false) - chain.variations(b, true) == 1) return eps;
  }
  throw RootCountError("failed to separate root at " + r.to_string());
}

}  // namespace

RootCount count_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi) {
  check_order(lo, hi);
  if (is_root(chain, lo)) throw RootCountError("left endpoint " + lo->to_string() + " is a root");
  if (is_root(chain, hi)) throw RootCountError("right endpoint " + hi->to_string() + " is a root");
  RootCount rc;
  rc.lo = lo;
  rc.hi = hi;
  rc.variations_lo = chain.variations(lo, false);
  rc.variations_hi = chain.variations(hi, true);
  rc.count = rc.variations_lo - rc.variations_hi;
  return rc;
}

RootCount count_roots_perturbed(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi) {
  check_order(lo, hi);
  Endpoint a = lo, b = hi;
  std::optional<Rational> moved_lo, moved_hi;
  if (is_root(chain, lo)) {
    Rational eps = isolating_radius(chain, *lo);
    while (hi && !(*lo + eps < *hi)) eps = eps / Rational(2);
    a = *lo + eps;
    moved_lo = a;
  }
  if (is_root(chain, hi)) {
    b = *hi + isolating_radius(chain, *hi);
    moved_hi = b;
  }
  RootCount rc = count_roots(chain, a, b);
  rc.lo = lo;
  rc.hi = hi;
  rc.perturbed_lo = moved_lo;
  rc.perturbed_hi = moved_hi;
  return rc;
}

IsolatingInterval isolate_root(const SturmChain& chain, const Rational& lo, const Rational& hi,
                               const Rational& width) {
  if (width.sign() <= 0) throw RootCountError("isolation width must be positive");
  const int initial = count_roots_perturbed(chain, lo, hi).count;
  if (initial != 1) {
    throw RootCountError("isolate_root needs exactly one root in the interval, found " + std::to_string(initial));
  }
  Rational a = lo, b = hi;
  while (b - a > width) {
    const Rational mid = (a + b) / Rational(2);
    if (chain.base().sign_at(mid) == 0) {
      return {max(a, mid - width), mid};
    }
    if (count_roots_perturbed(chain, a, mid).count == 1) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return {a, b};
}

}  // namespace cubecert
