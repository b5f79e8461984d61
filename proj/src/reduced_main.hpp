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

// The reduced two-sided inequality in x for fixed (y, b):
//   (x-by-b^2+A)/sqrt(x+1+A) <= (x-by+b^2+B)/sqrt(x-1+B),
//   A = sqrt((x+1)^2+1+(y+b)^2), B = sqrt((x-1)^2+1+(y-b)^2).
// Sums like A + (x+1) cancel badly for x -> -inf, so they are rewritten as
// q / (A - (x+1)) with q = 1+(y+b)^2 when x+1 < 0.

#include <cmath>

namespace cubecert::detail {

template <class T>
struct Sides {
  T lhs;
  T rhs;
};

// r + s where r = sqrt(s^2 + q), q >= 0, evaluated without cancellation.
template <class T>
T radical_plus(const T& s, const T& q, const T& r) {
  if (s >= 0) return r + s;
  return q / (r - s);
}

template <class T>
Sides<T> reduced_main(const T& x, const T& y, const T& b) {
  using std::sqrt;
  const T one(1);
  const T qa = one + (y + b) * (y + b);
  const T qb = one + (y - b) * (y - b);
  const T sa = x + one, sb = x - one;
  const T ra = sqrt(sa * sa + qa);
  const T rb = sqrt(sb * sb + qb);
  const T da = radical_plus(sa, qa, ra);  // x + 1 + A
  const T db = radical_plus(sb, qb, rb);  // x - 1 + B
  // x - by - b^2 + A = (x + 1 + A) - 1 - by - b^2
  const T na = da - one - b * y - b * b;
  const T nb = db + one - b * y + b * b;
  return {na / sqrt(da), nb / sqrt(db)};
}

}  // namespace cubecert::detail
