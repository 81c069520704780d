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

// Solution generators and direct-scan oracles for the quadratic and quartic
// equations the square-class proofs reduce to:
//   u^2 - 5v^2 = +-1,  x^2 - 4xy - y^2 in {-5, -1},  b^2 - 3c^2 = 1,
//   x^4 + 3x^2 + 1 = 5y^2,  x^4 - 3x^2 + 1 = 5y^2,  x^4 + 5x^2 + 5 = 5y^2.
//
// *_family builds solutions from sequence values; *_enumerate scans the
// smaller variable and tests squareness. The two are kept independent so
// one can check the other.

#ifndef LUCAS_DIOPHANTINE_HPP_
#define LUCAS_DIOPHANTINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lucas/sequence.hpp"

namespace lucas {

/// u^2 - 5v^2 = sign. z is set for parametric solutions.
struct PellSolution {
  Integer u;
  Integer v;
  int sign = 1;
  std::optional<Index> z;
};

/// x^2 - 4xy - y^2 = c with c in {-5, -1}.
struct FormSolution {
  Integer x;
  Integer y;
  int c = -5;
  std::optional<Index> z;
};

/// b^2 - 3c^2 = 1, b, c >= 1. m is the sequence index when parametric.
struct Pell3Solution {
  Integer b;
  Integer c;
  std::optional<Index> m;
};

enum class Quartic { PlusThree, MinusThree, PlusFive };

struct QuarticSolution {
  Quartic variant = Quartic::PlusThree;
  Integer x;
  Integer y;
};

/// (L_{3z}/2, F_{3z}/2) for z = 0, 2, 4, ... (sign +1) or z = 1, 3, 5, ...
/// (sign -1). Throws InvalidInput for count < 1 or sign not in {1, -1}.
std::vector<PellSolution> pell5_family(int sign, Index count,
                                       const SequenceEngine& eng =
                                           exact_engine());
/// Family members with v <= v_bound.
std::vector<PellSolution> pell5_family_upto(int sign, const Integer& v_bound,
                                            const SequenceEngine& eng =
                                                exact_engine());
/// Every nonnegative solution with v <= v_bound, by scan over v.
std::vector<PellSolution> pell5_enumerate(int sign, const Integer& v_bound);

/// c = -5: (L_{3z+3}/2, L_{3z}/2), z = 0, 2, 4, ...
/// c = -1: (F_{3z+3}/2, F_{3z}/2), z = 1, 3, 5, ...
std::vector<FormSolution> form_family(int c, Index count,
                                      const SequenceEngine& eng =
                                          exact_engine());
std::vector<FormSolution> form_family_upto(int c, const Integer& y_bound,
                                           const SequenceEngine& eng =
                                               exact_engine());
/// Solutions with x >= 1 and 0 <= y <= y_bound, from (x - 2y)^2 = 5y^2 + c.
std::vector<FormSolution> form_enumerate(int c, const Integer& y_bound);

/// (v_m(4,-1)/2, u_m(4,-1)) for m = 1, 2, ...
std::vector<Pell3Solution> pell3_family(Index count,
                                        const SequenceEngine& eng =
                                            exact_engine());
std::vector<Pell3Solution> pell3_family_upto(const Integer& c_bound,
                                             const SequenceEngine& eng =
                                                 exact_engine());
/// Positive solutions with c <= c_bound, by scan over c.
std::vector<Pell3Solution> pell3_enumerate(const Integer& c_bound);

/// The left-hand polynomial of the variant at x.
Integer quartic_value(Quartic variant, const Integer& x);
/// Positive solutions with x <= x_bound. Throws InvalidInput for x_bound < 1.
std::vector<QuarticSolution> quartic_solutions(Quartic variant,
                                               const Integer& x_bound);

std::string quartic_name(Quartic variant);  // "plus3", "minus3", "plus5"
std::optional<Quartic> parse_quartic(const std::string& name);

/// First y in [0, y_bound] where (2y+2)^2 + (4y-1)^2 != 20y^2 + 5, if any.
std::optional<Integer> pythagorean_identity_failure(const Integer& y_bound);

}  // namespace lucas

#endif  // LUCAS_DIOPHANTINE_HPP_
