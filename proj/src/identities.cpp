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

#include "lucas/identities.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lucas/arith.hpp"
#include "lucas/error.hpp"

namespace lucas {
namespace {

void require_q1(const SequenceParams& params, const char* check_id) {
  if (params.q() != 1) {
    throw InvalidInput(std::string(check_id) + " requires Q = 1");
  }
}

void require_odd_p(const SequenceParams& params, const char* check_id) {
  if (mpz_even_p(params.p().get_mpz_t())) {
    throw InvalidInput(std::string(check_id) + " requires odd P, got " +
                       params.p().get_str());
  }
}

void require_positive(Index value, const char* name, const char* check_id) {
  if (value < 1) {
    throw InvalidInput(std::string(check_id) + ": " + name +
                       " must be >= 1, got " + std::to_string(value));
  }
}

Index checked_mul(Index a, Index b) {
  Index out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InvalidInput("index arithmetic overflows a machine word");
  }
  return out;
}

Index checked_add(Index a, Index b) {
  Index out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw InvalidInput("index arithmetic overflows a machine word");
  }
  return out;
}

Index pow2_times(Index r, Index m) {
  if (r < 0 || r > 62) {
    throw InvalidInput("exponent out of range: " + std::to_string(r));
  }
  return checked_mul(Index{1} << r, m);
}

Integer mod_floor(const Integer& x, const Integer& modulus) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

enum class Term { U, V };

// X_k mod M for any integer k, through the engine's nonnegative-index
// modular path and X_{-j} = -+ X_j (-Q)^j.
Integer residue(const SequenceEngine& eng, const SequenceParams& params,
                Term term, Index k, const Integer& modulus) {
  if (modulus == 1) return 0;
  if (k >= 0) {
    return term == Term::U ? eng.u_mod(params, k, modulus)
                           : eng.v_mod(params, k, modulus);
  }
  if (k == std::numeric_limits<Index>::min()) {
    throw InvalidInput("index out of range");
  }
  const Index j = -k;
  Integer r = term == Term::U ? eng.u_mod(params, j, modulus)
                              : eng.v_mod(params, j, modulus);
  const bool sign_negative = params.q() == 1 && (j & 1);  // (-Q)^j == -1
  const bool negate = (term == Term::U) != sign_negative;
  if (negate) r = mod_floor(-r, modulus);
  return r;
}

CheckOutcome make(std::string id, const SequenceParams& params) {
  CheckOutcome out;
  out.check_id = std::move(id);
  out.inputs.emplace_back("P", params.p());
  out.inputs.emplace_back("Q", params.q());
  return out;
}

void finish_equal(CheckOutcome& out, Integer lhs, Integer rhs) {
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.passed = out.lhs == out.rhs;
}

// Shared body of the four shift congruences. The sign exponent is mn for
// a U_m modulus and (m+1)n for a V_m modulus.
CheckOutcome shift_check(const char* id, const SequenceParams& params,
                         Index m, Index n, Index r, Term value, Term divisor,
                         const SequenceEngine& eng) {
  require_q1(params, id);
  if (n == 0) throw InvalidInput(std::string(id) + ": n must be nonzero");
  if (divisor == Term::U && m == 0) {
    throw InvalidInput(std::string(id) + ": m must be nonzero");
  }
  const Index index = checked_add(checked_mul(checked_mul(2, m), n), r);
  const IndexedPair at_m = eng.pair_at(params, m);
  const Integer modulus = abs_of(divisor == Term::U ? at_m.u : at_m.v);
  if (modulus == 0) {
    throw InvalidInput(std::string(id) + ": zero modulus");
  }
  const bool m_odd = (m & 1) != 0;
  const bool n_odd = (n & 1) != 0;
  const bool sign_odd = divisor == Term::U ? (m_odd && n_odd)
                                           : (!m_odd && n_odd);

  CheckOutcome out = make(id, params);
  out.inputs.emplace_back("m", m);
  out.inputs.emplace_back("n", n);
  out.inputs.emplace_back("r", r);
  out.inputs.emplace_back("modulus", modulus);
  Integer rhs = residue(eng, params, value, r, modulus);
  if (sign_odd) rhs = mod_floor(-rhs, modulus);
  finish_equal(out, residue(eng, params, value, index, modulus),
               std::move(rhs));
  if (modulus == 1) out.note = "modulus 1";
  return out;
}

// Exhaustive search for x, a in [1, m) with gcd(a, m) = 1 and
// x^2 = -a^2 (mod m). Returns (x, a) of the first hit by a.
std::optional<std::pair<std::uint64_t, std::uint64_t>> minus_square_witness(
    std::uint64_t m) {
  std::vector<std::uint64_t> root_of(m, 0);  // 0 = not a square residue
  for (std::uint64_t x = 1; x < m; ++x) {
    const std::uint64_t s = x * x % m;
    if (root_of[s] == 0) root_of[s] = x;
  }
  for (std::uint64_t a = 1; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    const std::uint64_t target = (m - a * a % m) % m;
    if (root_of[target] != 0) return std::pair{root_of[target], a};
  }
  return std::nullopt;
}

constexpr std::uint64_t kResidueScanLimit = 10'000'000;

}  // namespace

CheckOutcome check_shift_U_mod_U(const SequenceParams& params, Index m,
                                 Index n, Index r, const SequenceEngine& eng) {
  return shift_check("shift_U_mod_U", params, m, n, r, Term::U, Term::U, eng);
}

CheckOutcome check_shift_V_mod_U(const SequenceParams& params, Index m,
                                 Index n, Index r, const SequenceEngine& eng) {
  return shift_check("shift_V_mod_U", params, m, n, r, Term::V, Term::U, eng);
}

CheckOutcome check_shift_U_mod_V(const SequenceParams& params, Index m,
                                 Index n, Index r, const SequenceEngine& eng) {
  return shift_check("shift_U_mod_V", params, m, n, r, Term::U, Term::V, eng);
}

CheckOutcome check_shift_V_mod_V(const SequenceParams& params, Index m,
                                 Index n, Index r, const SequenceEngine& eng) {
  return shift_check("shift_V_mod_V", params, m, n, r, Term::V, Term::V, eng);
}

std::vector<CheckOutcome> check_product_identities(
    const SequenceParams& params, Index n, const SequenceEngine& eng) {
  require_q1(params, "product_identities");
  const IndexedPair base = eng.pair_at(params, n);
  const IndexedPair twice = eng.pair_at(params, checked_mul(2, n));
  const Integer u3 = eng.u(params, checked_mul(3, n));
  const IndexedPair five = eng.pair_at(params, checked_mul(5, n));

  const Integer d = params.discriminant();
  const bool even = (n & 1) == 0;
  const int sign = even ? 1 : -1;
  const Integer& u = base.u;
  const Integer& v = base.v;
  const Integer u2 = u * u;
  const Integer v2 = v * v;

  std::vector<CheckOutcome> out;
  auto add = [&](const char* id, Integer lhs, Integer rhs) {
    CheckOutcome c = make(id, params);
    c.inputs.emplace_back("n", n);
    finish_equal(c, std::move(lhs), std::move(rhs));
    out.push_back(std::move(c));
  };
  add("double_U", twice.u, u * v);
  add("double_V", twice.v, v2 - 2 * sign);
  add("norm", v2 - d * u2, Integer(4 * sign));
  add("triple_U", u3, u * (d * u2 + 3 * sign));
  add("quintuple_U", five.u,
      even ? Integer(u * (d * d * u2 * u2 + 5 * d * u2 + 5))
           : Integer(u * (d * d * u2 * u2 - 5 * d * u2 + 5)));
  add("quintuple_V", five.v,
      even ? Integer(v * (v2 * v2 - 5 * v2 + 5))
           : Integer(v * (v2 * v2 + 5 * v2 + 5)));
  return out;
}

CheckOutcome check_q_minus_one_triple(const Integer& p, Index n,
                                      const SequenceEngine& eng) {
  if (p < 3) {
    throw InvalidInput("triple_u_qminus1 requires P >= 3, got " + p.get_str());
  }
  const SequenceParams params(p, -1);
  const Integer un = eng.u(params, n);
  CheckOutcome out = make("triple_u_qminus1", params);
  out.inputs.emplace_back("n", n);
  finish_equal(out, eng.u(params, checked_mul(3, n)),
               un * ((p * p - 4) * un * un + 3));
  return out;
}

CheckOutcome check_v5n_factor(const SequenceParams& params, Index n,
                              const SequenceEngine& eng) {
  require_q1(params, "v5n_factor");
  if (!mpz_divisible_ui_p(params.p().get_mpz_t(), 5)) {
    throw InvalidInput("v5n_factor requires 5 | P, got " +
                       params.p().get_str());
  }
  if ((n & 1) == 0) {
    throw InvalidInput("v5n_factor requires odd n, got " + std::to_string(n));
  }
  const Integer vn = eng.v(params, n);
  const Integer v5n = eng.v(params, checked_mul(5, n));
  const Integer divisor = 5 * vn;

  CheckOutcome out = make("v5n_factor", params);
  out.inputs.emplace_back("n", n);
  out.rhs = 1;
  if (divisor == 0 ||
      !mpz_divisible_p(v5n.get_mpz_t(), divisor.get_mpz_t())) {
    out.lhs = divisor == 0 ? v5n : mod_floor(v5n, abs_of(divisor));
    out.passed = false;
    out.note = "V_{5n} not divisible by 5 V_n";
    return out;
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), v5n.get_mpz_t(), divisor.get_mpz_t());
  out.lhs = mod_floor(q, 5);
  Integer a = (q - 1) / 5;
  out.inputs.emplace_back("a", a);
  out.passed = out.lhs == 1 && a >= 1;
  if (out.lhs == 1 && a < 1) out.note = "quotient is 1, so a = 0";
  return out;
}

std::vector<CheckOutcome> check_divisibility_laws(const SequenceParams& params,
                                                  Index m, Index n,
                                                  const SequenceEngine& eng) {
  require_q1(params, "divisibility_laws");
  require_positive(m, "m", "divisibility_laws");
  require_positive(n, "n", "divisibility_laws");
  const IndexedPair at_m = eng.pair_at(params, m);
  const IndexedPair at_n = eng.pair_at(params, n);
  const bool m_divides_n = n % m == 0;

  std::vector<CheckOutcome> out;
  {
    CheckOutcome c = make("divisibility_V", params);
    c.inputs.emplace_back("m", m);
    c.inputs.emplace_back("n", n);
    const bool divides = mpz_divisible_p(at_n.v.get_mpz_t(), at_m.v.get_mpz_t());
    const bool predicted = m_divides_n && ((n / m) & 1) == 1;
    finish_equal(c, divides ? 1 : 0, predicted ? 1 : 0);
    if (!c.passed && at_m.v <= 2) {
      c.note = "V_m = " + at_m.v.get_str() + " divides every V_n";
    }
    out.push_back(std::move(c));
  }
  {
    CheckOutcome c = make("divisibility_U", params);
    c.inputs.emplace_back("m", m);
    c.inputs.emplace_back("n", n);
    const bool divides = mpz_divisible_p(at_n.u.get_mpz_t(), at_m.u.get_mpz_t());
    if (at_m.u == 1) {
      finish_equal(c, divides ? 1 : 0, divides ? 1 : 0);
      c.note = "U_m = 1, law not asserted";
    } else {
      finish_equal(c, divides ? 1 : 0, m_divides_n ? 1 : 0);
    }
    out.push_back(std::move(c));
  }
  return out;
}

CheckOutcome check_gcd_U_V(const SequenceParams& params, Index n,
                           const SequenceEngine& eng) {
  require_q1(params, "gcd_U_V");
  require_odd_p(params, "gcd_U_V");
  require_positive(n, "n", "gcd_U_V");
  const IndexedPair at = eng.pair_at(params, n);
  Integer g;
  mpz_gcd(g.get_mpz_t(), at.u.get_mpz_t(), at.v.get_mpz_t());
  CheckOutcome out = make("gcd_U_V", params);
  out.inputs.emplace_back("n", n);
  finish_equal(out, std::move(g), n % 3 == 0 ? 2 : 1);
  return out;
}

CheckOutcome check_v_mod8_class(const SequenceParams& params, Index r,
                                Index m, const SequenceEngine& eng) {
  require_q1(params, "v_mod8_class");
  require_odd_p(params, "v_mod8_class");
  require_positive(r, "r", "v_mod8_class");
  require_positive(m, "m", "v_mod8_class");
  if ((m & 1) == 0) {
    throw InvalidInput("v_mod8_class requires odd m, got " + std::to_string(m));
  }
  const Index index = pow2_times(r, m);
  const int expected = m % 3 == 0 ? 2 : (r == 1 ? 3 : 7);
  CheckOutcome out = make("v_mod8_class", params);
  out.inputs.emplace_back("r", r);
  out.inputs.emplace_back("m", m);
  finish_equal(out, eng.v_mod(params, index, 8), expected);
  return out;
}

std::vector<CheckOutcome> check_mod_p2_laws(const SequenceParams& params,
                                            Index n,
                                            const SequenceEngine& eng) {
  require_q1(params, "mod_p2_laws");
  require_positive(n, "n", "mod_p2_laws");
  const Integer& p = params.p();
  const Integer modulus = p * p;
  const bool even = (n & 1) == 0;

  std::vector<CheckOutcome> out;
  auto add = [&](const char* id, Term term, Integer expected) {
    CheckOutcome c = make(id, params);
    c.inputs.emplace_back("n", n);
    if (modulus == 1) {
      finish_equal(c, 0, 0);
      c.note = "modulus 1";
    } else {
      finish_equal(c, residue(eng, params, term, n, modulus),
                   mod_floor(expected, modulus));
    }
    out.push_back(std::move(c));
  };
  add("v_mod_p2", Term::V, even ? Integer(2) : Integer(n * p));
  add("u_mod_p2", Term::U, even ? Integer((n / 2) * p) : Integer(1));
  return out;
}

CheckOutcome check_divisibility_by_5_and_3(const SequenceParams& params,
                                           Index n,
                                           const SequenceEngine& eng) {
  require_q1(params, "div_by_5_and_3");
  require_positive(n, "n", "div_by_5_and_3");
  const Integer five = 5;
  const Integer three = 3;
  const bool five_v = eng.v_mod(params, n, five) == 0;
  const bool five_u = eng.u_mod(params, n, five) == 0;
  const bool three_u = eng.u_mod(params, n, three) == 0;

  const unsigned long p5 = mpz_fdiv_ui(params.p().get_mpz_t(), 5);
  const unsigned long p3 = mpz_fdiv_ui(params.p().get_mpz_t(), 3);
  const bool n_odd = (n & 1) != 0;
  const bool pred_five_v = p5 == 0 && n_odd;
  bool pred_five_u;
  if (p5 == 0) {
    pred_five_u = !n_odd;
  } else if (p5 * p5 % 5 == 4) {
    pred_five_u = n % 3 == 0;
  } else {
    pred_five_u = n % 5 == 0;
  }
  const bool pred_three_u = p3 == 0 ? !n_odd : n % 4 == 0;

  auto mask = [](bool a, bool b, bool c) {
    return Integer((a ? 4 : 0) | (b ? 2 : 0) | (c ? 1 : 0));
  };
  CheckOutcome out = make("div_by_5_and_3", params);
  out.inputs.emplace_back("n", n);
  finish_equal(out, mask(five_v, five_u, three_u),
               mask(pred_five_v, pred_five_u, pred_three_u));
  out.note = "bits: 4 = 5|V_n, 2 = 5|U_n, 1 = 3|U_n";
  return out;
}

CheckOutcome check_lucas_pow2_mod4(Index k, const SequenceEngine& eng) {
  if (k < 1 || k > 62) {
    throw InvalidInput("lucas_pow2_mod4 needs 1 <= k <= 62, got " +
                       std::to_string(k));
  }
  const SequenceParams lucas_params(1, 1);
  CheckOutcome out = make("lucas_pow2_mod4", lucas_params);
  out.inputs.emplace_back("k", k);
  finish_equal(out, eng.v_mod(lucas_params, Index{1} << k, 4), 3);
  return out;
}

CheckOutcome check_minus_square_residue(std::uint64_t m) {
  if (m < 3 || (m & 1) == 0 || m > kResidueScanLimit) {
    throw InvalidInput("minus_square_residue needs odd 3 <= m <= 10^7, got " +
                       std::to_string(m));
  }
  CheckOutcome out;
  out.check_id = "minus_square_residue";
  out.inputs.emplace_back("m", static_cast<unsigned long>(m));
  out.rhs = 1;
  if (auto w = minus_square_witness(m)) {
    out.inputs.emplace_back("x", static_cast<unsigned long>(w->first));
    out.inputs.emplace_back("a", static_cast<unsigned long>(w->second));
    out.lhs = static_cast<unsigned long>(m % 4);
  } else {
    out.lhs = 1;
    out.note = "no coprime witness";
  }
  out.passed = out.lhs == out.rhs;
  return out;
}

CheckOutcome check_lucas_pow2_no_minus_square(Index k,
                                              const SequenceEngine& eng) {
  if (k < 1 || k > 5) {
    throw InvalidInput("lucas_pow2_no_minus_square needs 1 <= k <= 5, got " +
                       std::to_string(k));
  }
  const SequenceParams lucas_params(1, 1);
  const Integer lk = eng.v(lucas_params, Index{1} << k);
  CheckOutcome out = make("lucas_pow2_no_minus_square", lucas_params);
  out.inputs.emplace_back("k", k);
  out.inputs.emplace_back("m", lk);
  out.rhs = 0;
  if (lk < 3 || lk > kResidueScanLimit || mpz_even_p(lk.get_mpz_t())) {
    out.lhs = 1;
    out.passed = false;
    out.note = "L_{2^k} outside the scannable odd range";
    return out;
  }
  const auto m = static_cast<std::uint64_t>(lk.get_ui());
  if (auto w = minus_square_witness(m)) {
    out.inputs.emplace_back("x", static_cast<unsigned long>(w->first));
    out.inputs.emplace_back("a", static_cast<unsigned long>(w->second));
    out.lhs = 1;
  } else {
    out.lhs = 0;
  }
  out.passed = out.lhs == out.rhs;
  return out;
}

std::vector<CheckOutcome> check_jacobi_p2plus3(const SequenceParams& params,
                                               Index r,
                                               const SequenceEngine& eng) {
  require_q1(params, "jacobi_p2plus3");
  require_odd_p(params, "jacobi_p2plus3");
  if (r < 1 || r > 24) {
    throw InvalidInput("jacobi_p2plus3 needs 1 <= r <= 24, got " +
                       std::to_string(r));
  }
  const Integer& p = params.p();
  const Integer v2r = eng.v(params, Index{1} << r);

  std::vector<CheckOutcome> out;
  {
    CheckOutcome c = make("jacobi_p2plus3", params);
    c.inputs.emplace_back("r", r);
    if (v2r < 1 || mpz_even_p(v2r.get_mpz_t())) {
      c.lhs = 0;
      c.rhs = 1;
      c.passed = false;
      c.note = "V_{2^r} is not an odd positive modulus";
    } else {
      finish_equal(c, jacobi(p * p + 3, v2r), 1);
    }
    out.push_back(std::move(c));
  }
  if (r >= 3) {
    CheckOutcome c = make("v_pow2_mod_v2", params);
    c.inputs.emplace_back("r", r);
    const Integer v2 = abs_of(eng.v(params, 2));
    finish_equal(c, mod_floor(v2r, v2), mod_floor(2, v2));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lucas
