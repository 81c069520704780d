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

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "lucas/diophantine.hpp"
#include "lucas/error.hpp"
#include "oracle.hpp"

namespace lucas {
namespace {

using Pairs = std::vector<std::pair<Integer, Integer>>;

template <typename S, typename F>
Pairs pairs_of(const std::vector<S>& items, F key) {
  Pairs out;
  for (const auto& s : items) out.push_back(key(s));
  return out;
}

auto pell_key = [](const PellSolution& s) { return std::pair(s.u, s.v); };
auto form_key = [](const FormSolution& s) { return std::pair(s.x, s.y); };
auto pell3_key = [](const Pell3Solution& s) { return std::pair(s.b, s.c); };

TEST(Pell5, PinnedValues) {
  EXPECT_EQ(pairs_of(pell5_family(1, 2), pell_key), (Pairs{{1, 0}, {9, 4}}));
  EXPECT_EQ(pairs_of(pell5_family(-1, 2), pell_key), (Pairs{{2, 1}, {38, 17}}));
  EXPECT_EQ(pairs_of(pell5_family(1, 1), pell_key), (Pairs{{1, 0}}));
  EXPECT_EQ(pairs_of(pell5_enumerate(-1, 20), pell_key),
            (Pairs{{2, 1}, {38, 17}}));
  EXPECT_EQ(pairs_of(pell5_enumerate(1, 0), pell_key), (Pairs{{1, 0}}));
  EXPECT_EQ(pairs_of(pell5_enumerate(1, 100), pell_key),
            (Pairs{{1, 0}, {9, 4}, {161, 72}}));
}

TEST(Pell5, FamilyCarriesIndicesAndSatisfiesEquation) {
  for (int sign : {1, -1}) {
    const auto family = pell5_family(sign, 14);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& s = family[i];
      ASSERT_TRUE(s.z.has_value());
      EXPECT_EQ(*s.z, static_cast<Index>(2 * i) + (sign == 1 ? 0 : 1));
      EXPECT_EQ(s.u * s.u - 5 * s.v * s.v, sign);
      EXPECT_EQ(2 * s.u, oracle::v(1, 1, 3 * *s.z));
      EXPECT_EQ(2 * s.v, oracle::u(1, 1, 3 * *s.z));
      if (i > 0) {
        EXPECT_GT(s.u, family[i - 1].u);
        EXPECT_GT(s.v, family[i - 1].v);
      }
    }
  }
}

TEST(Pell5, FamilyMatchesScan) {
  for (int sign : {1, -1}) {
    EXPECT_EQ(pairs_of(pell5_family_upto(sign, 200000), pell_key),
              pairs_of(pell5_enumerate(sign, 200000), pell_key));
  }
  EXPECT_THROW(pell5_family(2, 1), InvalidInput);
  EXPECT_THROW(pell5_family(1, 0), InvalidInput);
  EXPECT_THROW(pell5_enumerate(1, -1), InvalidInput);
}

TEST(Form, PinnedValues) {
  EXPECT_EQ(pairs_of(form_family(-5, 2), form_key), (Pairs{{2, 1}, {38, 9}}));
  EXPECT_EQ(pairs_of(form_family(-1, 2), form_key), (Pairs{{4, 1}, {72, 17}}));
  EXPECT_EQ(pairs_of(form_family(-1, 1), form_key), (Pairs{{4, 1}}));
  EXPECT_EQ(pairs_of(form_enumerate(-5, 10), form_key),
            (Pairs{{2, 1}, {38, 9}}));
  EXPECT_EQ(pairs_of(form_enumerate(-1, 20), form_key),
            (Pairs{{4, 1}, {72, 17}}));
  EXPECT_TRUE(form_enumerate(-5, 0).empty());
  EXPECT_THROW(form_family(-3, 1), InvalidInput);
}

TEST(Form, FamilyMatchesScanAndIsIncreasing) {
  for (int c : {-5, -1}) {
    const auto family = form_family_upto(c, 50000);
    EXPECT_EQ(pairs_of(family, form_key),
              pairs_of(form_enumerate(c, 50000), form_key));
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& s = family[i];
      EXPECT_EQ(s.x * s.x - 4 * s.x * s.y - s.y * s.y, c);
      if (i > 0) {
        EXPECT_GT(s.x, family[i - 1].x);
        EXPECT_GT(s.y, family[i - 1].y);
      }
    }
  }
}

TEST(Pell3, PinnedAndScan) {
  EXPECT_EQ(pairs_of(pell3_family(3), pell3_key),
            (Pairs{{2, 1}, {7, 4}, {26, 15}}));
  EXPECT_EQ(pairs_of(pell3_family(1), pell3_key), (Pairs{{2, 1}}));
  EXPECT_EQ(pairs_of(pell3_enumerate(15), pell3_key),
            (Pairs{{2, 1}, {7, 4}, {26, 15}}));
  EXPECT_EQ(pairs_of(pell3_family_upto(100000), pell3_key),
            pairs_of(pell3_enumerate(100000), pell3_key));
  for (const auto& s : pell3_family(20)) EXPECT_EQ(s.b * s.b - 3 * s.c * s.c, 1);
}

TEST(Quartic, Fixtures) {
  const auto plus3 = quartic_solutions(Quartic::PlusThree, 10000);
  ASSERT_EQ(plus3.size(), 1U);
  EXPECT_EQ(plus3[0].x, 1);
  EXPECT_EQ(plus3[0].y, 1);
  const auto minus3 = quartic_solutions(Quartic::MinusThree, 10000);
  ASSERT_EQ(minus3.size(), 1U);
  EXPECT_EQ(minus3[0].x, 2);
  EXPECT_EQ(minus3[0].y, 1);
  EXPECT_TRUE(quartic_solutions(Quartic::PlusFive, 10000).empty());
  EXPECT_THROW(quartic_solutions(Quartic::PlusFive, 0), InvalidInput);
  EXPECT_EQ(quartic_value(Quartic::MinusThree, 2), 5);
  EXPECT_EQ(parse_quartic("minus3"), Quartic::MinusThree);
  EXPECT_FALSE(parse_quartic("cubic").has_value());
}

TEST(Quartic, PythagoreanIdentity) {
  EXPECT_FALSE(pythagorean_identity_failure(10000).has_value());
}

TEST(Halving, OddTermsAreDetected) {
  const SequenceParams fib(1, 1);
  const PerturbedEngine bad(exact_engine(), fib, 6,
                            PerturbedEngine::Component::V);
  EXPECT_THROW(pell5_family(1, 2, bad), std::runtime_error);
}

}  // namespace
}  // namespace lucas
