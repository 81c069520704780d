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

#include "lucas/diophantine.hpp"

#include <stdexcept>
#include <utility>

#include "lucas/arith.hpp"
#include "lucas/error.hpp"

namespace lucas {
namespace {

const SequenceParams& fibonacci_params() {
  static const SequenceParams params(1, 1);
  return params;
}

const SequenceParams& pell3_params() {
  static const SequenceParams params(4, -1);
  return params;
}

Integer half(const Integer& x, const char* what, Index index) {
  if (mpz_odd_p(x.get_mpz_t())) {
    throw std::runtime_error(std::string(what) + " at index " +
                             std::to_string(index) + " is odd: " +
                             x.get_str());
  }
  Integer h;
  mpz_divexact_ui(h.get_mpz_t(), x.get_mpz_t(), 2);
  return h;
}

void require_sign(int sign) {
  if (sign != 1 && sign != -1) {
    throw InvalidInput("sign must be +1 or -1, got " + std::to_string(sign));
  }
}

void require_form_constant(int c) {
  if (c != -5 && c != -1) {
    throw InvalidInput("form constant must be -5 or -1, got " +
                       std::to_string(c));
  }
}

void require_count(Index count) {
  if (count < 1) {
    throw InvalidInput("count must be >= 1, got " + std::to_string(count));
  }
}

void require_bound(const Integer& bound, const char* name) {
  if (bound < 0) {
    throw InvalidInput(std::string(name) + " must be >= 0, got " +
                       bound.get_str());
  }
}

PellSolution pell5_at(int sign, Index z, const SequenceEngine& eng) {
  const IndexedPair p = eng.pair_at(fibonacci_params(), 3 * z);
  return PellSolution{half(p.v, "L", 3 * z), half(p.u, "F", 3 * z), sign, z};
}

FormSolution form_at(int c, Index z, const SequenceEngine& eng) {
  const IndexedPair lo = eng.pair_at(fibonacci_params(), 3 * z);
  const IndexedPair hi = eng.pair_at(fibonacci_params(), 3 * z + 3);
  if (c == -5) {
    return FormSolution{half(hi.v, "L", 3 * z + 3), half(lo.v, "L", 3 * z), c,
                        z};
  }
  return FormSolution{half(hi.u, "F", 3 * z + 3), half(lo.u, "F", 3 * z), c,
                      z};
}

Pell3Solution pell3_at(Index m, const SequenceEngine& eng) {
  const IndexedPair p = eng.pair_at(pell3_params(), m);
  return Pell3Solution{half(p.v, "v", m), p.u, m};
}

}  // namespace

std::vector<PellSolution> pell5_family(int sign, Index count,
                                       const SequenceEngine& eng) {
  require_sign(sign);
  require_count(count);
  std::vector<PellSolution> out;
  for (Index i = 0; i < count; ++i) {
    out.push_back(pell5_at(sign, 2 * i + (sign == 1 ? 0 : 1), eng));
  }
  return out;
}

std::vector<PellSolution> pell5_family_upto(int sign, const Integer& v_bound,
                                            const SequenceEngine& eng) {
  require_sign(sign);
  require_bound(v_bound, "v bound");
  std::vector<PellSolution> out;
  for (Index z = sign == 1 ? 0 : 1;; z += 2) {
    PellSolution s = pell5_at(sign, z, eng);
    if (s.v > v_bound) break;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PellSolution> pell5_enumerate(int sign, const Integer& v_bound) {
  require_sign(sign);
  require_bound(v_bound, "v bound");
  std::vector<PellSolution> out;
  for (Integer v = 0; v <= v_bound; ++v) {
    const Integer t = 5 * v * v + sign;
    if (auto u = square_witness(t, 1)) {
      out.push_back(PellSolution{std::move(*u), v, sign, std::nullopt});
    }
  }
  return out;
}

std::vector<FormSolution> form_family(int c, Index count,
                                      const SequenceEngine& eng) {
  require_form_constant(c);
  require_count(count);
  std::vector<FormSolution> out;
  for (Index i = 0; i < count; ++i) {
    out.push_back(form_at(c, 2 * i + (c == -5 ? 0 : 1), eng));
  }
  return out;
}

std::vector<FormSolution> form_family_upto(int c, const Integer& y_bound,
                                           const SequenceEngine& eng) {
  require_form_constant(c);
  require_bound(y_bound, "y bound");
  std::vector<FormSolution> out;
  for (Index z = c == -5 ? 0 : 1;; z += 2) {
    FormSolution s = form_at(c, z, eng);
    if (s.y > y_bound) break;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<FormSolution> form_enumerate(int c, const Integer& y_bound) {
  require_form_constant(c);
  require_bound(y_bound, "y bound");
  std::vector<FormSolution> out;
  for (Integer y = 0; y <= y_bound; ++y) {
    const Integer t = 5 * y * y + c;
    auto s = square_witness(t, 1);
    if (!s) continue;
    // both roots of (x - 2y)^2 = 5y^2 + c
    const Integer lo = 2 * y - *s;
    if (lo >= 1 && *s != 0) out.push_back(FormSolution{lo, y, c, std::nullopt});
    const Integer hi = 2 * y + *s;
    if (hi >= 1) out.push_back(FormSolution{hi, y, c, std::nullopt});
  }
  return out;
}

std::vector<Pell3Solution> pell3_family(Index count,
                                        const SequenceEngine& eng) {
  require_count(count);
  std::vector<Pell3Solution> out;
  for (Index m = 1; m <= count; ++m) out.push_back(pell3_at(m, eng));
  return out;
}

std::vector<Pell3Solution> pell3_family_upto(const Integer& c_bound,
                                             const SequenceEngine& eng) {
  require_bound(c_bound, "c bound");
  std::vector<Pell3Solution> out;
  for (Index m = 1;; ++m) {
    Pell3Solution s = pell3_at(m, eng);
    if (s.c > c_bound) break;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Pell3Solution> pell3_enumerate(const Integer& c_bound) {
  require_bound(c_bound, "c bound");
  std::vector<Pell3Solution> out;
  for (Integer c = 1; c <= c_bound; ++c) {
    if (auto b = square_witness(3 * c * c + 1, 1)) {
      out.push_back(Pell3Solution{std::move(*b), c, std::nullopt});
    }
  }
  return out;
}

Integer quartic_value(Quartic variant, const Integer& x) {
  const Integer x2 = x * x;
  switch (variant) {
    case Quartic::PlusThree:
      return x2 * x2 + 3 * x2 + 1;
    case Quartic::MinusThree:
      return x2 * x2 - 3 * x2 + 1;
    case Quartic::PlusFive:
      return x2 * x2 + 5 * x2 + 5;
  }
  throw InvalidInput("unknown quartic variant");
}

std::vector<QuarticSolution> quartic_solutions(Quartic variant,
                                               const Integer& x_bound) {
  if (x_bound < 1) {
    throw InvalidInput("x bound must be >= 1, got " + x_bound.get_str());
  }
  std::vector<QuarticSolution> out;
  for (Integer x = 1; x <= x_bound; ++x) {
    auto y = square_witness(quartic_value(variant, x), 5);
    if (y && *y >= 1) out.push_back(QuarticSolution{variant, x, *y});
  }
  return out;
}

std::string quartic_name(Quartic variant) {
  switch (variant) {
    case Quartic::PlusThree:
      return "plus3";
    case Quartic::MinusThree:
      return "minus3";
    case Quartic::PlusFive:
      return "plus5";
  }
  return "?";
}

std::optional<Quartic> parse_quartic(const std::string& name) {
  if (name == "plus3") return Quartic::PlusThree;
  if (name == "minus3") return Quartic::MinusThree;
  if (name == "plus5") return Quartic::PlusFive;
  return std::nullopt;
}

std::optional<Integer> pythagorean_identity_failure(const Integer& y_bound) {
  require_bound(y_bound, "y bound");
  for (Integer y = 0; y <= y_bound; ++y) {
    const Integer a = 2 * y + 2;
    const Integer b = 4 * y - 1;
    if (a * a + b * b != 20 * y * y + 5) return y;
  }
  return std::nullopt;
}

}  // namespace lucas
