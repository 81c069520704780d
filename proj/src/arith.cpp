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

#include "lucas/arith.hpp"

#include <utility>

#include "lucas/error.hpp"

namespace lucas {

Integer isqrt(const Integer& n) {
  if (n < 0) {
    throw InvalidInput("isqrt of negative value " + n.get_str());
  }
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> square_witness(const Integer& n, const Integer& w) {
  if (w <= 0) {
    throw InvalidInput("square class coefficient must be positive, got " +
                       w.get_str());
  }
  if (n < 0) return std::nullopt;
  if (n == 0) return Integer(0);
  if (!mpz_divisible_p(n.get_mpz_t(), w.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), w.get_mpz_t());
  if (!mpz_perfect_square_p(q.get_mpz_t())) return std::nullopt;
  mpz_sqrt(q.get_mpz_t(), q.get_mpz_t());
  return q;
}

std::optional<SquareClass> square_class(const Integer& n) {
  for (unsigned w : kSquareClassWeights) {
    if (auto x = square_witness(n, w)) return SquareClass{w, std::move(*x)};
  }
  return std::nullopt;
}

int jacobi(const Integer& a_in, const Integer& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t())) {
    throw InvalidInput("Jacobi symbol needs an odd positive modulus, got " +
                       n_in.get_str());
  }
  Integer a;
  Integer n = n_in;
  mpz_mod(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
  int result = 1;
  while (a != 0) {
    // Pull out 2^e; each factor 2 contributes (2/n) = -1 iff n = 3, 5 mod 8.
    const mp_bitcnt_t e = mpz_scan1(a.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), e);
    const unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
    if ((e & 1U) && (n8 == 3 || n8 == 5)) result = -result;
    // Reciprocity for odd a, n.
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && n8 % 4 == 3) result = -result;
    std::swap(a, n);
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  }
  return n == 1 ? result : 0;
}

}  // namespace lucas
