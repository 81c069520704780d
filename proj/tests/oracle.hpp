// Copyright 2026 The lucas-squares Authors
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

// Test-only reference implementations, deliberately naive.

#ifndef LUCAS_TESTS_ORACLE_HPP_
#define LUCAS_TESTS_ORACLE_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Int = mpz_class;

/// (U_n, V_n) by stepping the recurrence forwards from 0 or backwards via
/// X_k = (X_{k+2} - P X_{k+1}) / Q.
inline std::pair<Int, Int> pair(const Int& p, int q, std::int64_t n) {
  Int u0 = 0, u1 = 1, v0 = 2, v1 = p;
  if (n >= 0) {
    for (std::int64_t i = 0; i < n; ++i) {
      Int u2 = p * u1 + q * u0;
      Int v2 = p * v1 + q * v0;
      u0 = u1;
      u1 = u2;
      v0 = v1;
      v1 = v2;
    }
    return {u0, v0};
  }
  for (std::int64_t i = 0; i > n; --i) {
    Int um = (u1 - p * u0) / q;
    Int vm = (v1 - p * v0) / q;
    u1 = u0;
    u0 = um;
    v1 = v0;
    v0 = vm;
  }
  return {u0, v0};
}

inline Int u(const Int& p, int q, std::int64_t n) { return pair(p, q, n).first; }
inline Int v(const Int& p, int q, std::int64_t n) { return pair(p, q, n).second; }

using Mat = std::array<Int, 4>;  // row-major 2x2

inline Mat mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// [[P, Q], [1, 0]]^n = [[U_{n+1}, Q U_n], [U_n, Q U_{n-1}]] for n >= 1.
inline Mat companion_power(const Int& p, int q, std::uint64_t n) {
  Mat result = {1, 0, 0, 1};
  Mat base = {p, q, 1, 0};
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

/// floor(sqrt(n)) by bisection.
inline Int isqrt(const Int& n) {
  Int lo = 0, hi = n + 1;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

inline bool is_square(const Int& n) {
  if (n < 0) return false;
  const Int r = isqrt(n);
  return r * r == n;
}

inline Int pow_mod(Int b, Int e, const Int& m) {
  Int r = 1;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e % 2 == 1) r = r * b % m;
    b = b * b % m;
    e /= 2;
  }
  return r;
}

/// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(const Int& a, const Int& p) {
  const Int r = pow_mod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

/// Jacobi symbol as a product of Legendre symbols over the factorisation.
inline int jacobi(const Int& a, long n) {
  int result = 1;
  for (long d = 3; n > 1; d += 2) {
    while (n % d == 0) {
      result *= legendre(a, d);
      n /= d;
    }
  }
  return result;
}

}  // namespace oracle

#endif  // LUCAS_TESTS_ORACLE_HPP_
