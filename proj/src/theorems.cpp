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

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lucas/arith.hpp"
#include "lucas/classifier.hpp"
#include "lucas/diophantine.hpp"
#include "lucas/error.hpp"

namespace lucas {
namespace {

enum class Coverage { Asserted, FlagOnly, Uncovered };

constexpr Index kQuarticBound = 10'000;

struct TheoremShape {
  Family family;
  std::vector<unsigned> weights;
  Index m_min;
};

struct Exceptional {
  unsigned p;
  Index n;
  unsigned w;
  unsigned x;
};

// (P, n, w, x) beyond n <= 2 for U_n = w x^2, w in {1, 2, 3, 6}.
constexpr std::array<Exceptional, 8> kUSquareExceptions = {{
    {2, 4, 3, 2},
    {2, 7, 1, 13},
    {4, 4, 2, 6},
    {1, 12, 1, 12},
    {1, 3, 2, 1},
    {1, 4, 3, 1},
    {1, 6, 2, 2},
    {24, 4, 3, 68},
}};

const std::vector<std::string> kSearchIds = {
    "t2.3", "t2.4", "t2.5", "T2.6", "T2.7",      "T2.9",
    "t3.3", "t3.4", "t3.6", "t3.7", "fl-squares",
};
const std::vector<std::string> kQuarticIds = {"t3.1", "t3.2"};

bool is_search_id(const std::string& id) {
  return std::find(kSearchIds.begin(), kSearchIds.end(), id) !=
         kSearchIds.end();
}

bool is_quartic_id(const std::string& id) {
  return std::find(kQuarticIds.begin(), kQuarticIds.end(), id) !=
         kQuarticIds.end();
}

void require_search_id(const std::string& id) {
  if (!is_search_id(id)) {
    std::string known;
    for (const auto& k : kSearchIds) known += " " + k;
    throw InvalidInput("unknown theorem id '" + id + "'; search ids:" + known);
  }
}

std::vector<TheoremShape> shapes(const std::string& id) {
  if (id == "t2.3") return {{Family::U, {1, 2, 3, 6}, 1}};
  if (id == "t2.4") return {{Family::V, {1}, 1}};
  if (id == "t2.5") return {{Family::V, {2}, 1}};
  if (id == "T2.6") return {{Family::VV, {1}, 1}};
  if (id == "T2.7") return {{Family::VV, {2}, 1}};
  if (id == "T2.9") return {{Family::UU, {2}, 2}};
  if (id == "t3.3") return {{Family::V, {5}, 1}};
  if (id == "t3.4") return {{Family::VV, {5}, 1}};
  if (id == "t3.6") return {{Family::U, {5}, 1}};
  if (id == "t3.7") return {{Family::UU, {5}, 2}};
  if (id == "fl-squares") {
    return {{Family::U, {1, 2, 5, 10}, 1}, {Family::V, {1, 2}, 1}};
  }
  require_search_id(id);
  return {};
}

unsigned long mod_ui(const Integer& p, unsigned long k) {
  return mpz_fdiv_ui(p.get_mpz_t(), k);
}

bool is_odd(const Integer& p) { return mpz_odd_p(p.get_mpz_t()) != 0; }

// P^2 mod 5 in {0, 1, 4}.
unsigned long p2_mod5(const Integer& p) {
  const unsigned long r = mod_ui(p, 5);
  return r * r % 5;
}

// Text of the hypothesis on P that fails for every n, if any.
std::optional<std::string> p_violation(const std::string& id,
                                       const Integer& p) {
  const std::string ps = "P = " + p.get_str();
  if (id == "fl-squares") {
    if (p != 1) return ps + " but the classification is for P = 1";
    return std::nullopt;
  }
  if (id == "t2.3" || id == "t3.4") return std::nullopt;
  if (id == "t3.6" || id == "t3.7") {
    if (is_odd(p)) return std::nullopt;
    if (p2_mod5(p) == 0) return ps + " is even with 5 | P; not covered";
    if (p2_mod5(p) == 4) {
      if (id == "t3.6") {
        return ps + " is even with P^2 = -1 (mod 5); not covered";
      }
      if (mod_ui(p, 4) != 0) {
        return ps + " is 2 (mod 4) with P^2 = -1 (mod 5); not covered";
      }
    }
    return std::nullopt;
  }
  if (!is_odd(p)) return ps + " is even; the theorem needs odd P";
  return std::nullopt;
}

Coverage cell_coverage(const std::string& id, const Integer& p, Index n) {
  if (p_violation(id, p)) return Coverage::Uncovered;
  if (id == "t3.6" && !is_odd(p) && p2_mod5(p) == 1) return Coverage::FlagOnly;
  if (id == "t3.7" && !is_odd(p) && p2_mod5(p) == 4 && (n & 1) == 0) {
    return Coverage::Uncovered;
  }
  return Coverage::Asserted;
}

std::optional<Integer> root_of_quotient(const Integer& p, unsigned w) {
  return square_witness(p, w);
}

bool contains(const std::vector<unsigned>& ws, unsigned w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

std::string describe(const SquareClassFinding& f) {
  std::ostringstream os;
  os << family_name(f.family) << " P=" << f.p.get_str() << " n=" << f.n;
  if (f.m) os << " m=" << *f.m;
  os << " w=" << f.w << " x=" << f.x.get_str();
  return os.str();
}

std::string annotate(const SquareClassFinding& f, const SequenceEngine& eng) {
  if (!f.m) return "";
  const SequenceParams params(f.p, 1);
  const IndexedPair at_m = eng.pair_at(params, *f.m);
  const bool use_u = f.family == Family::UU;
  const Integer& term = use_u ? at_m.u : at_m.v;
  const std::string name = use_u ? "U_m" : "V_m";
  if (term == 1) return " (divisor term " + name + " equals 1)";
  if (term == 2) return " (divisor term " + name + " equals 2)";
  return "";
}

TheoremReport verify_quartic(const std::string& id) {
  struct Expect {
    Quartic variant;
    std::vector<std::pair<unsigned, unsigned>> solutions;
  };
  std::vector<Expect> expects;
  if (id == "t3.1") {
    expects = {{Quartic::PlusThree, {{1, 1}}}, {Quartic::MinusThree, {{2, 1}}}};
  } else {
    expects = {{Quartic::PlusFive, {}}};
  }
  TheoremReport report;
  report.theorem_id = id;
  for (const Expect& e : expects) {
    const auto found = quartic_solutions(e.variant, kQuarticBound);
    CheckOutcome c;
    c.check_id = "quartic_" + quartic_name(e.variant);
    c.inputs.emplace_back("x_max", Integer(kQuarticBound));
    c.lhs = static_cast<unsigned long>(found.size());
    c.rhs = static_cast<unsigned long>(e.solutions.size());
    bool same = found.size() == e.solutions.size();
    std::string listed;
    for (std::size_t i = 0; i < found.size(); ++i) {
      listed += " (" + found[i].x.get_str() + "," + found[i].y.get_str() + ")";
      if (same && (found[i].x != e.solutions[i].first ||
                   found[i].y != e.solutions[i].second)) {
        same = false;
      }
    }
    c.passed = same;
    c.note = quartic_name(e.variant) + ":" + (listed.empty() ? " none" : listed);
    report.notes.push_back(c.note);
    ++report.checks_run;
    if (!c.passed) {
      ++report.failed_count;
      report.failed_checks.push_back(std::move(c));
    }
  }
  report.verdict =
      report.failed_count == 0 ? Verdict::Consistent : Verdict::Counterexample;
  return report;
}

}  // namespace

const std::vector<std::string>& search_theorem_ids() { return kSearchIds; }
const std::vector<std::string>& quartic_theorem_ids() { return kQuarticIds; }

bool is_known_theorem(const std::string& id) {
  return is_search_id(id) || is_quartic_id(id);
}

Box hypothesis_box(const std::string& id, Index p_max, bool odd_only,
                   Index n_max, Index m_max) {
  require_search_id(id);
  if (p_max < 1) {
    throw InvalidInput("P bound must be >= 1, got " + std::to_string(p_max));
  }
  Box box;
  box.n_max = n_max;
  box.m_max = m_max;
  for (Index p = 1; p <= p_max; ++p) {
    if (odd_only && (p & 1) == 0) continue;
    if (!p_violation(id, Integer(p))) box.p_values.emplace_back(p);
  }
  box.p_spec = "1.." + std::to_string(p_max) + (odd_only ? ":odd" : "") +
               " within " + id + " hypotheses";
  if (box.p_values.empty()) {
    throw OutOfScope("no P <= " + std::to_string(p_max) + " satisfies the " +
                     id + " hypotheses");
  }
  return box;
}

std::vector<SquareClassQuery> theorem_queries(const std::string& id,
                                              const Box& box) {
  const std::vector<TheoremShape> shape_list = shapes(id);
  for (const Integer& p : box.p_values) {
    if (auto why = p_violation(id, p)) throw OutOfScope(id + ": " + *why);
  }
  std::vector<SquareClassQuery> out;
  for (const TheoremShape& s : shape_list) {
    SquareClassQuery q;
    q.family = s.family;
    q.weights = s.weights;
    q.p_values = box.p_values;
    q.p_spec = box.p_spec;
    q.n_max = box.n_max;
    if (is_two_term(s.family)) {
      q.m_min = s.m_min;
      q.m_max = std::min(box.m_max, box.n_max);
    }
    q.validate();
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<SquareClassFinding> predicted_set(const std::string& id,
                                              const SquareClassQuery& query) {
  require_search_id(id);
  query.validate();
  for (const Integer& p : query.p_values) {
    if (auto why = p_violation(id, p)) throw OutOfScope(id + ": " + *why);
  }
  const Family fam = query.family;
  const Index n_max = query.n_max;
  std::vector<SquareClassFinding> out;
  auto add = [&](const Integer& p, Index n, std::optional<Index> m, unsigned w,
                 const Integer& x) {
    if (n > n_max || !contains(query.weights, w)) return;
    if (m && (*m < query.m_min || *m > *query.m_max)) return;
    if (cell_coverage(id, p, n) != Coverage::Asserted) return;
    out.push_back({fam, p, n, m, w, x});
  };

  for (const Integer& p : query.p_values) {
    if (id == "t2.3") {
      add(p, 1, std::nullopt, 1, 1);
      for (unsigned w : query.weights) {
        if (auto x = root_of_quotient(p, w)) add(p, 2, std::nullopt, w, *x);
      }
      for (const Exceptional& e : kUSquareExceptions) {
        if (p == e.p) add(p, e.n, std::nullopt, e.w, e.x);
      }
    } else if (id == "t2.4") {
      if (auto x = root_of_quotient(p, 1)) add(p, 1, std::nullopt, 1, *x);
      if (p == 1) add(p, 3, std::nullopt, 1, 2);
      if (p == 3) add(p, 3, std::nullopt, 1, 6);
    } else if (id == "t2.5") {
      if (p == 1) add(p, 6, std::nullopt, 2, 3);
      if (p == 5) add(p, 6, std::nullopt, 2, 99);
    } else if (id == "T2.9") {
      if (p == 5) add(p, 12, 6, 2, 99);
    } else if (id == "t3.3") {
      if (auto x = root_of_quotient(p, 5)) add(p, 1, std::nullopt, 5, *x);
    } else if (id == "t3.6") {
      if (is_odd(p) && p2_mod5(p) == 0) {
        if (auto x = root_of_quotient(p, 5)) add(p, 2, std::nullopt, 5, *x);
      } else if (p == 1) {
        add(p, 5, std::nullopt, 5, 1);
      }
    } else if (id == "fl-squares") {
      if (fam == Family::U) {
        add(p, 1, std::nullopt, 1, 1);
        add(p, 2, std::nullopt, 1, 1);
        add(p, 12, std::nullopt, 1, 12);
        add(p, 3, std::nullopt, 2, 1);
        add(p, 6, std::nullopt, 2, 2);
        add(p, 5, std::nullopt, 5, 1);
      } else {
        add(p, 1, std::nullopt, 1, 1);
        add(p, 3, std::nullopt, 1, 2);
        add(p, 6, std::nullopt, 2, 3);
      }
    }
    // T2.6, T2.7, t3.4, t3.7: nothing
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TheoremReport verify_theorem(const std::string& id, const Box& box,
                             const SequenceEngine& eng, unsigned jobs) {
  if (is_quartic_id(id)) return verify_quartic(id);
  TheoremReport report;
  report.theorem_id = id;
  report.queries = theorem_queries(id, box);

  std::vector<SquareClassFinding> compared;
  std::vector<SquareClassFinding> flagged;
  for (const SquareClassQuery& q : report.queries) {
    const auto predicted = predicted_set(id, q);
    report.predicted.insert(report.predicted.end(), predicted.begin(),
                            predicted.end());
    const Index per_p =
        is_two_term(q.family)
            ? q.n_max * (*q.m_max - q.m_min + 1)
            : q.n_max;
    report.checks_run += per_p * static_cast<Index>(q.p_values.size()) *
                         static_cast<Index>(q.weights.size());
    for (SquareClassFinding& f : search(q, eng, jobs)) {
      switch (cell_coverage(id, f.p, f.n)) {
        case Coverage::Asserted:
          compared.push_back(f);
          report.found.push_back(std::move(f));
          break;
        case Coverage::FlagOnly:
          report.notes.push_back("flagged, outside the asserted cases: " +
                                 describe(f));
          flagged.push_back(f);
          report.found.push_back(std::move(f));
          break;
        case Coverage::Uncovered:
          report.notes.push_back("ignored, hypothesis not met: " +
                                 describe(f));
          break;
      }
    }
  }
  std::sort(report.predicted.begin(), report.predicted.end());
  std::sort(report.found.begin(), report.found.end());
  std::sort(compared.begin(), compared.end());

  std::vector<SquareClassFinding> extra;
  std::vector<SquareClassFinding> missing;
  std::set_difference(compared.begin(), compared.end(),
                      report.predicted.begin(), report.predicted.end(),
                      std::back_inserter(extra));
  std::set_difference(report.predicted.begin(), report.predicted.end(),
                      compared.begin(), compared.end(),
                      std::back_inserter(missing));
  for (const auto& f : extra) {
    report.notes.push_back("unpredicted: " + describe(f) + annotate(f, eng));
  }
  for (const auto& f : missing) {
    report.notes.push_back("predicted but not found: " + describe(f));
  }
  report.failed_count = static_cast<Index>(extra.size() + missing.size());
  if (!extra.empty() || !missing.empty()) {
    report.verdict = Verdict::Counterexample;
  } else if (!flagged.empty()) {
    report.verdict = Verdict::OutOfPredictedScope;
  } else {
    report.verdict = Verdict::Consistent;
  }
  return report;
}

}  // namespace lucas
