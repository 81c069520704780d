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

#include "lucas/sequence.hpp"

#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "lucas/error.hpp"

namespace lucas {
namespace {

constexpr Index kMinIndex = std::numeric_limits<Index>::min();
constexpr Index kMaxIndex = std::numeric_limits<Index>::max();

std::uint64_t magnitude(Index n) {
  if (n == kMinIndex) {
    throw InvalidInput("index out of range: " + std::to_string(n));
  }
  return static_cast<std::uint64_t>(n < 0 ? -n : n);
}

// (U_k, V_k) for k >= 0 by doubling on (U, V):
//   U_{2k} = U_k V_k,                 V_{2k} = V_k^2 - 2 (-Q)^k,
//   U_{k+1} = (P U_k + V_k) / 2,      V_{k+1} = (D U_k + P V_k) / 2,
// where D = P^2 + 4Q. Both halvings are exact.
std::pair<Integer, Integer> forward_pair(const SequenceParams& params,
                                         std::uint64_t k) {
  const Integer& p = params.p();
  const Integer d = params.discriminant();
  const int neg_q = -params.q();

  Integer u = 0;
  Integer v = 2;
  int sign = 1;  // (-Q)^j for the current index j
  Integer t;
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    u *= v;
    v *= v;
    v -= 2 * sign;
    sign = 1;
    if ((k >> bit) & 1U) {
      t = p * u + v;
      v = d * u + p * v;
      mpz_divexact_ui(u.get_mpz_t(), t.get_mpz_t(), 2);
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
      sign *= neg_q;
    }
  }
  return {std::move(u), std::move(v)};
}

void check_modulus(const Integer& modulus) {
  if (modulus < 2) {
    throw InvalidInput("modulus must be >= 2, got " + modulus.get_str());
  }
}

void reduce(Integer& x, const Integer& modulus) {
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
}

// (U_n, U_{n+1}) mod M by the division-free doubling
//   U_{2k}   = U_k (2 U_{k+1} - P U_k),
//   U_{2k+1} = U_{k+1}^2 + Q U_k^2,
// which read off the square of [[P, Q], [1, 0]]^k.
std::pair<Integer, Integer> modular_u_pair(const SequenceParams& params,
                                           Index n, const Integer& modulus) {
  if (n < 0) {
    throw InvalidInput("modular evaluation needs n >= 0, got " +
                       std::to_string(n));
  }
  check_modulus(modulus);
  Integer p = params.p();
  reduce(p, modulus);
  const int q = params.q();
  const auto k = static_cast<std::uint64_t>(n);

  Integer a = 0;  // U_j
  Integer b = 1;  // U_{j+1}
  Integer t;
  Integer s;
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    t = 2 * b - p * a;
    t *= a;
    s = b * b + q * (a * a);
    a = std::move(t);
    b = std::move(s);
    reduce(a, modulus);
    reduce(b, modulus);
    if ((k >> bit) & 1U) {
      t = p * b + q * a;
      reduce(t, modulus);
      a = std::move(b);
      b = std::move(t);
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

SequenceParams::SequenceParams(Integer p, int q) : p_(std::move(p)), q_(q) {
  if (q_ != 1 && q_ != -1) {
    throw InvalidInput("Q must be 1 or -1, got " + std::to_string(q_));
  }
  if (p_ < 1) {
    throw InvalidInput("P must be >= 1, got " + p_.get_str());
  }
  if (discriminant() <= 0) {
    throw InvalidInput("P^2 + 4Q must be positive, got P=" + p_.get_str() +
                       " Q=" + std::to_string(q_));
  }
}

Integer SequenceParams::discriminant() const { return p_ * p_ + 4 * q_; }

IndexedPair pair_at(const SequenceParams& params, Index n) {
  const std::uint64_t k = magnitude(n);
  auto [u, v] = forward_pair(params, k);
  if (n < 0) {
    // (-Q)^k is +-1, so dividing by it is multiplying by it.
    const bool flip = params.q() == 1 && (k & 1U);
    if (flip) {
      v = -v;
    } else {
      u = -u;
    }
  }
  return IndexedPair{n, std::move(u), std::move(v)};
}

Integer u(const SequenceParams& params, Index n) {
  return pair_at(params, n).u;
}

Integer v(const SequenceParams& params, Index n) {
  return pair_at(params, n).v;
}

Integer u_mod(const SequenceParams& params, Index n, const Integer& modulus) {
  return modular_u_pair(params, n, modulus).first;
}

Integer v_mod(const SequenceParams& params, Index n, const Integer& modulus) {
  auto [a, b] = modular_u_pair(params, n, modulus);
  // V_n = 2 U_{n+1} - P U_n
  Integer r = 2 * b - params.p() * a;
  reduce(r, modulus);
  return r;
}

ModularPair pair_mod(const SequenceParams& params, Index n,
                     const Integer& modulus) {
  auto [a, b] = modular_u_pair(params, n, modulus);
  Integer r = 2 * b - params.p() * a;
  reduce(r, modulus);
  return ModularPair{n, modulus, std::move(a), std::move(r)};
}

SequenceRange::SequenceRange(SequenceParams params, Index n_lo, Index n_hi)
    : params_(std::move(params)), n_lo_(n_lo), n_hi_(n_hi) {
  if (n_lo > n_hi) {
    throw InvalidInput("empty index range " + std::to_string(n_lo) + ".." +
                       std::to_string(n_hi));
  }
  if (n_lo == kMinIndex || n_hi == kMaxIndex) {
    throw InvalidInput("index range exceeds machine-word bounds");
  }
}

SequenceRange::iterator SequenceRange::begin() const {
  return iterator(&params_, pair_at(params_, n_lo_),
                  pair_at(params_, n_lo_ + 1));
}

SequenceRange::iterator SequenceRange::end() const {
  return iterator(n_hi_ + 1);
}

SequenceRange::iterator::iterator(const SequenceParams* params,
                                  IndexedPair current, IndexedPair next)
    : params_(params), current_(std::move(current)), next_(std::move(next)) {}

SequenceRange::iterator& SequenceRange::iterator::operator++() {
  const Integer& p = params_->p();
  const int q = params_->q();
  IndexedPair after;
  after.n = next_.n + 1;
  after.u = p * next_.u + q * current_.u;
  after.v = p * next_.v + q * current_.v;
  current_ = std::move(next_);
  next_ = std::move(after);
  return *this;
}

SequenceRange seq_range(const SequenceParams& params, Index n_lo, Index n_hi) {
  return SequenceRange(params, n_lo, n_hi);
}

}  // namespace lucas
