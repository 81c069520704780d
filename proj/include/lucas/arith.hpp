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

#ifndef LUCAS_ARITH_HPP_
#define LUCAS_ARITH_HPP_

#include <array>
#include <optional>

#include "lucas/sequence.hpp"

namespace lucas {

/// The square-free coefficients the classification equations use.
inline constexpr std::array<unsigned, 7> kSquareClassWeights = {
    1, 2, 3, 5, 6, 10, 15};

/// n = w * x^2 with w drawn from kSquareClassWeights.
struct SquareClass {
  unsigned w = 1;
  Integer x;
};

/// floor(sqrt(n)). Throws InvalidInput for n < 0.
Integer isqrt(const Integer& n);

/// The x >= 0 with n == w * x^2, if any. Negative n never has one.
/// Throws InvalidInput for w <= 0.
std::optional<Integer> square_witness(const Integer& n, const Integer& w);

/// The unique class in kSquareClassWeights that n belongs to, if any.
/// Zero is reported as 1 * 0^2.
std::optional<SquareClass> square_class(const Integer& n);

/// Jacobi symbol (a / n) for odd n >= 1; (a / 1) = 1.
/// Throws InvalidInput for even or nonpositive n.
int jacobi(const Integer& a, const Integer& n);

}  // namespace lucas

#endif  // LUCAS_ARITH_HPP_
