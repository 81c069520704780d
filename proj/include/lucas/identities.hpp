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

// Identities, congruences and divisibility laws of U_n and V_n as
// executable predicates. Every check returns the two sides it compared so a
// failure carries its own witness.
//
// Congruence checks reduce both sides into [0, M) before comparing, so
// `passed` is exactly `lhs == rhs`. Biconditional checks encode each side
// as 0/1 (or as a small bit mask, see check_divisibility_by_5_and_3).
//
// Unless stated otherwise a check requires Q = 1 and throws InvalidInput
// otherwise. All checks read sequence values through a SequenceEngine,
// defaulting to the exact one.

#ifndef LUCAS_IDENTITIES_HPP_
#define LUCAS_IDENTITIES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "lucas/sequence.hpp"

namespace lucas {

struct CheckOutcome {
  std::string check_id;
  std::vector<std::pair<std::string, Integer>> inputs;
  bool passed = false;
  Integer lhs;
  Integer rhs;
  std::string note;
};

// U_{2mn+r} = (-1)^{mn} U_r (mod U_m). m and n nonzero.
CheckOutcome check_shift_U_mod_U(const SequenceParams& params, Index m,
                                 Index n, Index r,
                                 const SequenceEngine& eng = exact_engine());
// V_{2mn+r} = (-1)^{mn} V_r (mod U_m). m and n nonzero.
CheckOutcome check_shift_V_mod_U(const SequenceParams& params, Index m,
                                 Index n, Index r,
                                 const SequenceEngine& eng = exact_engine());
// U_{2mn+r} = (-1)^{(m+1)n} U_r (mod V_m). n nonzero.
CheckOutcome check_shift_U_mod_V(const SequenceParams& params, Index m,
                                 Index n, Index r,
                                 const SequenceEngine& eng = exact_engine());
// V_{2mn+r} = (-1)^{(m+1)n} V_r (mod V_m). n nonzero.
CheckOutcome check_shift_V_mod_V(const SequenceParams& params, Index m,
                                 Index n, Index r,
                                 const SequenceEngine& eng = exact_engine());

/// Exact product formulas at index n, one outcome each:
///   double_U      U_{2n} = U_n V_n
///   double_V      V_{2n} = V_n^2 - 2(-1)^n
///   norm          V_n^2 - (P^2+4) U_n^2 = 4(-1)^n
///   triple_U      U_{3n} = U_n ((P^2+4) U_n^2 + 3(-1)^n)
///   quintuple_U   U_{5n} = U_n (D^2 U_n^4 +- 5 D U_n^2 + 5), + for even n
///   quintuple_V   V_{5n} = V_n (V_n^4 -+ 5 V_n^2 + 5),     - for even n
std::vector<CheckOutcome> check_product_identities(
    const SequenceParams& params, Index n,
    const SequenceEngine& eng = exact_engine());

/// u_{3n} = u_n ((P^2-4) u_n^2 + 3) for the Q = -1 family, P >= 3.
CheckOutcome check_q_minus_one_triple(const Integer& p, Index n,
                                      const SequenceEngine& eng =
                                          exact_engine());

/// For 5 | P and odd n, V_{5n} = 5 V_n (5a + 1) with a >= 1. lhs is the
/// quotient V_{5n} / (5 V_n) reduced mod 5 (or the remainder of the
/// division when it is not exact), rhs is 1; `a` is reported as an input.
CheckOutcome check_v5n_factor(const SequenceParams& params, Index n,
                              const SequenceEngine& eng = exact_engine());

/// For m, n >= 1:
///   divisibility_V   V_m | V_n  <=>  m | n and n/m odd
///   divisibility_U   U_m | U_n  <=>  m | n, asserted only when U_m != 1
std::vector<CheckOutcome> check_divisibility_laws(
    const SequenceParams& params, Index m, Index n,
    const SequenceEngine& eng = exact_engine());

/// For odd P and n >= 1: gcd(U_n, V_n) is 2 when 3 | n and 1 otherwise.
CheckOutcome check_gcd_U_V(const SequenceParams& params, Index n,
                           const SequenceEngine& eng = exact_engine());

/// For odd P, r >= 1 and odd m >= 1, V_{2^r m} mod 8 is 2 if 3 | m,
/// 3 if r = 1, and 7 otherwise.
CheckOutcome check_v_mod8_class(const SequenceParams& params, Index r,
                                Index m,
                                const SequenceEngine& eng = exact_engine());

/// Residues modulo P^2 for n >= 1:
///   v_mod_p2   V_n = 2 (n even), n P (n odd)
///   u_mod_p2   U_n = (n/2) P (n even), 1 (n odd)
std::vector<CheckOutcome> check_mod_p2_laws(
    const SequenceParams& params, Index n,
    const SequenceEngine& eng = exact_engine());

/// For n >= 1, compares the divisibility pattern (5|V_n, 5|U_n, 3|U_n)
/// against the residue-class prediction:
///   5 | V_n  <=>  5 | P and n odd
///   5 | U_n  <=>  2 | n if 5 | P;  3 | n if P^2 = -1 (mod 5);
///                 5 | n if P^2 = 1 (mod 5)
///   3 | U_n  <=>  2 | n if 3 | P;  4 | n otherwise
/// lhs and rhs are 3-bit masks with bit 2 = 5|V, bit 1 = 5|U, bit 0 = 3|U.
CheckOutcome check_divisibility_by_5_and_3(
    const SequenceParams& params, Index n,
    const SequenceEngine& eng = exact_engine());

/// L_{2^k} = 3 (mod 4), evaluated modularly, 1 <= k <= 62.
CheckOutcome check_lucas_pow2_mod4(Index k,
                                   const SequenceEngine& eng = exact_engine());

/// Odd m >= 3: if x^2 = -a^2 (mod m) for some x, a in [1, m) with
/// gcd(a, m) = 1, then m = 1 (mod 4). Decided by exhaustive scan; m is
/// limited to 10^7. lhs is m mod 4 when a witness exists and 1 otherwise.
CheckOutcome check_minus_square_residue(std::uint64_t m);

/// For m = L_{2^k}: no x, a with gcd(a, m) = 1 satisfy x^2 = -a^2 (mod m).
/// lhs is 1 if a witness exists, rhs is 0. 1 <= k <= 5.
CheckOutcome check_lucas_pow2_no_minus_square(
    Index k, const SequenceEngine& eng = exact_engine());

/// For odd P and r >= 1:
///   jacobi_p2plus3     ((P^2 + 3) / V_{2^r}) = 1
///   v_pow2_mod_v2      V_{2^r} = 2 (mod V_2), only emitted for r >= 3
std::vector<CheckOutcome> check_jacobi_p2plus3(
    const SequenceParams& params, Index r,
    const SequenceEngine& eng = exact_engine());

}  // namespace lucas

#endif  // LUCAS_IDENTITIES_HPP_
