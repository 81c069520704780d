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

// Exact and modular evaluation of the generalized Fibonacci sequence
// U_n(P,Q) and its Lucas companion V_n(P,Q):
//
//   U_0 = 0, U_1 = 1, V_0 = 2, V_1 = P,
//   X_{n+2} = P X_{n+1} + Q X_n,
//
// extended to negative indices by U_{-n} = -U_n / (-Q)^n and
// V_{-n} = V_n / (-Q)^n. Only Q = 1 and Q = -1 are supported, so the
// divisions above are multiplications by +-1.

#ifndef LUCAS_SEQUENCE_HPP_
#define LUCAS_SEQUENCE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <iterator>
#include <vector>

namespace lucas {

using Integer = mpz_class;
using Index = std::int64_t;

/// The pair (P, Q) selecting one sequence family.
///
/// Invariants: P >= 1, Q in {1, -1}, P^2 + 4Q > 0. The last one rules out
/// (P, Q) = (1, -1) and (2, -1).
class SequenceParams {
 public:
  /// Throws InvalidInput when the invariants above do not hold.
  SequenceParams(Integer p, int q);

  const Integer& p() const { return p_; }
  int q() const { return q_; }

  /// P^2 + 4Q.
  Integer discriminant() const;

  friend bool operator==(const SequenceParams& a, const SequenceParams& b) {
    return a.q_ == b.q_ && a.p_ == b.p_;
  }

 private:
  Integer p_;
  int q_;
};

/// (U_n, V_n) at one index. Satisfies v^2 - (P^2+4Q) u^2 = 4 (-Q)^n.
struct IndexedPair {
  Index n = 0;
  Integer u;
  Integer v;
};

/// (U_n mod M, V_n mod M) with both residues in [0, M).
struct ModularPair {
  Index n = 0;
  Integer modulus;
  Integer u_res;
  Integer v_res;
};

Integer u(const SequenceParams& params, Index n);
Integer v(const SequenceParams& params, Index n);

/// Fast doubling, O(log |n|) bignum operations. Throws InvalidInput for
/// n == INT64_MIN.
IndexedPair pair_at(const SequenceParams& params, Index n);

/// Residues of U_n and V_n for n >= 0, computed without ever leaving
/// Z/MZ. Throws InvalidInput if n < 0 or modulus < 2.
Integer u_mod(const SequenceParams& params, Index n, const Integer& modulus);
Integer v_mod(const SequenceParams& params, Index n, const Integer& modulus);
ModularPair pair_mod(const SequenceParams& params, Index n,
                     const Integer& modulus);

/// Consecutive pairs for n_lo <= n <= n_hi, produced by the linear
/// recurrence after one fast-doubling seed at n_lo.
class SequenceRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = IndexedPair;
    using difference_type = std::ptrdiff_t;
    using pointer = const IndexedPair*;
    using reference = const IndexedPair&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.current_.n == b.current_.n;
    }

   private:
    friend class SequenceRange;
    iterator(const SequenceParams* params, IndexedPair current,
             IndexedPair next);
    explicit iterator(Index end_index) { current_.n = end_index; }

    const SequenceParams* params_ = nullptr;
    IndexedPair current_;
    IndexedPair next_;
  };

  SequenceRange(SequenceParams params, Index n_lo, Index n_hi);

  iterator begin() const;
  iterator end() const;

  Index size() const { return n_hi_ - n_lo_ + 1; }

 private:
  SequenceParams params_;
  Index n_lo_;
  Index n_hi_;
};

/// Throws InvalidInput if n_lo > n_hi.
SequenceRange seq_range(const SequenceParams& params, Index n_lo, Index n_hi);

/// Source of sequence values for the checks and searches. The exact engine
/// forwards to the free functions above; alternative engines (see
/// PerturbedEngine) let the harness prove it notices wrong values.
class SequenceEngine {
 public:
  virtual ~SequenceEngine() = default;

  virtual IndexedPair pair_at(const SequenceParams& params, Index n) const = 0;
  virtual Integer u_mod(const SequenceParams& params, Index n,
                        const Integer& modulus) const = 0;
  virtual Integer v_mod(const SequenceParams& params, Index n,
                        const Integer& modulus) const = 0;
  virtual std::vector<IndexedPair> range(const SequenceParams& params,
                                         Index n_lo, Index n_hi) const = 0;

  Integer u(const SequenceParams& params, Index n) const {
    return pair_at(params, n).u;
  }
  Integer v(const SequenceParams& params, Index n) const {
    return pair_at(params, n).v;
  }
};

/// The stateless exact engine.
const SequenceEngine& exact_engine();

/// Wraps another engine and adds `delta` to a single U or V value at one
/// (params, n) point, in exact and modular results alike.
class PerturbedEngine final : public SequenceEngine {
 public:
  enum class Component { U, V };

  PerturbedEngine(const SequenceEngine& base, SequenceParams target, Index n,
                  Component component, Integer delta = 1);

  IndexedPair pair_at(const SequenceParams& params, Index n) const override;
  Integer u_mod(const SequenceParams& params, Index n,
                const Integer& modulus) const override;
  Integer v_mod(const SequenceParams& params, Index n,
                const Integer& modulus) const override;
  std::vector<IndexedPair> range(const SequenceParams& params, Index n_lo,
                                 Index n_hi) const override;

 private:
  bool hits(const SequenceParams& params, Index n) const {
    return n == index_ && params == target_;
  }

  const SequenceEngine& base_;
  SequenceParams target_;
  Index index_;
  Component component_;
  Integer delta_;
};

}  // namespace lucas

#endif  // LUCAS_SEQUENCE_HPP_
