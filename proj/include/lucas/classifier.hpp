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

// Bounded search for the four square-class equation families
//   U   U_n = w x^2          V   V_n = w x^2
//   UU  U_n = w U_m x^2      VV  V_n = w V_m x^2
// with Q = 1 and n, m >= 1, and the harness that compares what a search
// finds with the solution set a classification theorem predicts.

#ifndef LUCAS_CLASSIFIER_HPP_
#define LUCAS_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lucas/identities.hpp"
#include "lucas/sequence.hpp"

namespace lucas {

enum class Family { U, V, UU, VV };

std::string family_name(Family family);
std::optional<Family> parse_family(const std::string& name);
bool is_two_term(Family family);

struct SquareClassQuery {
  Family family = Family::U;
  std::vector<unsigned> weights;  // square-free, ascending
  std::vector<Integer> p_values;  // ascending, distinct, >= 1
  std::string p_spec;             // how p_values was written
  Index n_max = 1;
  Index m_min = 1;                // two-term families only
  std::optional<Index> m_max;     // required for two-term families

  /// Throws InvalidInput naming the first violated constraint.
  void validate() const;
};

struct SquareClassFinding {
  Family family = Family::U;
  Integer p;
  Index n = 0;
  std::optional<Index> m;
  unsigned w = 1;
  Integer x;
};

bool operator==(const SquareClassFinding& a, const SquareClassFinding& b);
/// Canonical order: (family, P, n, m, w).
bool operator<(const SquareClassFinding& a, const SquareClassFinding& b);

/// Every finding in the query's box, in canonical order. Two-term searches
/// skip n == m. Work is split over P across `jobs` threads; the result does
/// not depend on `jobs`.
std::vector<SquareClassFinding> search(
    const SquareClassQuery& query,
    const SequenceEngine& eng = exact_engine(), unsigned jobs = 1);

enum class Verdict { Consistent, Counterexample, OutOfPredictedScope };

std::string verdict_name(Verdict verdict);
std::optional<Verdict> parse_verdict(const std::string& name);

struct TheoremReport {
  std::string theorem_id;
  std::vector<SquareClassQuery> queries;
  std::vector<SquareClassFinding> predicted;
  std::vector<SquareClassFinding> found;
  Index checks_run = 0;
  Index failed_count = 0;
  std::vector<CheckOutcome> failed_checks;  // first few failures only
  Verdict verdict = Verdict::Consistent;
  std::vector<std::string> notes;
};

/// P range and index bounds a theorem is checked over.
struct Box {
  std::vector<Integer> p_values;
  std::string p_spec;
  Index n_max = 1;
  Index m_max = 1;
};

/// Search-backed theorem ids, in report order.
const std::vector<std::string>& search_theorem_ids();
/// Quartic fixture ids, checked by scan rather than search.
const std::vector<std::string>& quartic_theorem_ids();
bool is_known_theorem(const std::string& id);

/// Box members of [1, p_max] (odd only if requested) that satisfy the
/// theorem's hypothesis on P.
Box hypothesis_box(const std::string& id, Index p_max, bool odd_only,
                   Index n_max, Index m_max);

/// The queries a theorem runs over a box. Throws OutOfScope naming the
/// hypothesis when some P in the box is not covered by the theorem.
std::vector<SquareClassQuery> theorem_queries(const std::string& id,
                                              const Box& box);

/// The theorem's solution set inside the query's box, positive indices
/// only. Throws OutOfScope as theorem_queries does.
std::vector<SquareClassFinding> predicted_set(const std::string& id,
                                              const SquareClassQuery& query);

/// Search, predict and diff. Quartic ids ignore the box.
TheoremReport verify_theorem(const std::string& id, const Box& box,
                             const SequenceEngine& eng = exact_engine(),
                             unsigned jobs = 1);

}  // namespace lucas

#endif  // LUCAS_CLASSIFIER_HPP_
