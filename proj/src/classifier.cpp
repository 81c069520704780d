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

#include "lucas/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

#include "lucas/arith.hpp"
#include "lucas/error.hpp"

namespace lucas {
namespace {

bool square_free(unsigned w) {
  for (unsigned d = 2; d * d <= w; ++d) {
    if (w % (d * d) == 0) return false;
  }
  return true;
}

void search_one_p(const SquareClassQuery& query, const Integer& p,
                  const SequenceEngine& eng,
                  std::vector<SquareClassFinding>& out) {
  const SequenceParams params(p, 1);
  const bool use_u = query.family == Family::U || query.family == Family::UU;
  const std::vector<IndexedPair> values = eng.range(params, 1, query.n_max);
  auto term = [&](Index k) -> const Integer& {
    const IndexedPair& pair = values[static_cast<std::size_t>(k - 1)];
    return use_u ? pair.u : pair.v;
  };

  if (!is_two_term(query.family)) {
    for (Index n = 1; n <= query.n_max; ++n) {
      for (unsigned w : query.weights) {
        auto x = square_witness(term(n), w);
        if (x && *x >= 1) {
          out.push_back({query.family, p, n, std::nullopt, w, std::move(*x)});
        }
      }
    }
    return;
  }

  Integer divisor;
  Integer q;
  for (Index n = 1; n <= query.n_max; ++n) {
    const Integer& xn = term(n);
    if (xn <= 0) continue;
    for (Index m = query.m_min; m <= *query.m_max; ++m) {
      if (m == n) continue;
      for (unsigned w : query.weights) {
        divisor = term(m) * w;
        if (divisor <= 0 || cmp(xn, divisor) < 0) continue;
        if (!mpz_divisible_p(xn.get_mpz_t(), divisor.get_mpz_t())) continue;
        mpz_divexact(q.get_mpz_t(), xn.get_mpz_t(), divisor.get_mpz_t());
        if (!mpz_perfect_square_p(q.get_mpz_t())) continue;
        Integer x;
        mpz_sqrt(x.get_mpz_t(), q.get_mpz_t());
        out.push_back({query.family, p, n, m, w, std::move(x)});
      }
    }
  }
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::U:
      return "U";
    case Family::V:
      return "V";
    case Family::UU:
      return "UU";
    case Family::VV:
      return "VV";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "U") return Family::U;
  if (name == "V") return Family::V;
  if (name == "UU") return Family::UU;
  if (name == "VV") return Family::VV;
  return std::nullopt;
}

bool is_two_term(Family family) {
  return family == Family::UU || family == Family::VV;
}

void SquareClassQuery::validate() const {
  if (weights.empty()) throw InvalidInput("query needs at least one w");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0 || !square_free(weights[i])) {
      throw InvalidInput("w must be a positive square-free integer, got " +
                         std::to_string(weights[i]));
    }
    if (i > 0 && weights[i] <= weights[i - 1]) {
      throw InvalidInput("weights must be ascending and distinct");
    }
  }
  if (p_values.empty()) throw InvalidInput("query has an empty P set");
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    if (p_values[i] < 1) {
      throw InvalidInput("P must be >= 1, got " + p_values[i].get_str());
    }
    if (i > 0 && p_values[i] <= p_values[i - 1]) {
      throw InvalidInput("P values must be ascending and distinct");
    }
  }
  if (n_max < 1) {
    throw InvalidInput("n_max must be >= 1, got " + std::to_string(n_max));
  }
  if (is_two_term(family)) {
    if (!m_max) {
      throw InvalidInput("family " + family_name(family) + " needs m_max");
    }
    if (m_min < 1 || m_min > *m_max) {
      throw InvalidInput("need 1 <= m_min <= m_max, got m_min = " +
                         std::to_string(m_min) +
                         ", m_max = " + std::to_string(*m_max));
    }
    if (*m_max > n_max) {
      throw InvalidInput("m_max must not exceed n_max");
    }
  } else if (m_max) {
    throw InvalidInput("family " + family_name(family) + " takes no m bound");
  }
}

bool operator==(const SquareClassFinding& a, const SquareClassFinding& b) {
  return a.family == b.family && a.p == b.p && a.n == b.n && a.m == b.m &&
         a.w == b.w && a.x == b.x;
}

bool operator<(const SquareClassFinding& a, const SquareClassFinding& b) {
  if (a.family != b.family) return a.family < b.family;
  if (const int c = cmp(a.p, b.p); c != 0) return c < 0;
  if (a.n != b.n) return a.n < b.n;
  if (a.m != b.m) return a.m < b.m;
  if (a.w != b.w) return a.w < b.w;
  return cmp(a.x, b.x) < 0;
}

std::vector<SquareClassFinding> search(const SquareClassQuery& query,
                                       const SequenceEngine& eng,
                                       unsigned jobs) {
  query.validate();
  const std::size_t cells = query.p_values.size();
  std::vector<std::vector<SquareClassFinding>> per_p(cells);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, cells));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      try {
        search_one_p(query, query.p_values[i], eng, per_p[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<SquareClassFinding> out;
  for (auto& cell : per_p) {
    std::move(cell.begin(), cell.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::Counterexample:
      return "counterexample";
    case Verdict::OutOfPredictedScope:
      return "out_of_predicted_scope";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(const std::string& name) {
  if (name == "consistent") return Verdict::Consistent;
  if (name == "counterexample") return Verdict::Counterexample;
  if (name == "out_of_predicted_scope") return Verdict::OutOfPredictedScope;
  return std::nullopt;
}

}  // namespace lucas
