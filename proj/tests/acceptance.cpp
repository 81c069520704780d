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

// Acceptance suite: one PASS/FAIL line per criterion, with its runtime
// against a fixed limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lucas/classifier.hpp"
#include "lucas/diophantine.hpp"
#include "lucas/harness.hpp"
#include "lucas/sequence.hpp"

namespace {

using lucas::Box;
using lucas::Family;
using lucas::Index;
using lucas::Integer;
using lucas::SquareClassFinding;
using lucas::TheoremReport;
using lucas::Verdict;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string describe(const SquareClassFinding& f) {
  std::ostringstream os;
  os << "(" << lucas::family_name(f.family) << " P=" << f.p.get_str()
     << " n=" << f.n;
  if (f.m) os << " m=" << *f.m;
  os << " w=" << f.w << " x=" << f.x.get_str() << ")";
  return os.str();
}

std::string join_findings(const std::vector<SquareClassFinding>& fs) {
  if (fs.empty()) return "none";
  std::string out;
  for (const auto& f : fs) out += (out.empty() ? "" : " ") + describe(f);
  return out;
}

std::string report_witness(const TheoremReport& r) {
  std::string out = r.theorem_id + " " + lucas::verdict_name(r.verdict);
  for (const auto& n : r.notes) {
    if (n.rfind("unpredicted", 0) == 0 || n.rfind("predicted but", 0) == 0 ||
        n.rfind("flagged", 0) == 0) {
      out += "; " + n;
    }
  }
  for (const auto& c : r.failed_checks) {
    out += "; " + c.check_id;
    for (const auto& [k, v] : c.inputs) out += " " + k + "=" + v.get_str();
    out += " lhs=" + c.lhs.get_str() + " rhs=" + c.rhs.get_str();
    break;
  }
  return out;
}

Box box_where(const std::string& id, Index p_max, Index n_max, Index m_max,
              const std::function<bool(long)>& keep, const std::string& spec) {
  Box box;
  for (long p = 1; p <= p_max; ++p) {
    if (keep(p)) box.p_values.emplace_back(p);
  }
  box.p_spec = spec;
  box.n_max = n_max;
  box.m_max = m_max;
  (void)id;
  return box;
}

bool odd(long p) { return (p & 1) != 0; }
long p2mod5(long p) { return p * p % 5; }

Outcome quartic_fixtures() {
  Outcome o;
  struct Want {
    lucas::Quartic variant;
    std::vector<std::pair<int, int>> sols;
  };
  for (const Want& w : {Want{lucas::Quartic::PlusThree, {{1, 1}}},
                        Want{lucas::Quartic::MinusThree, {{2, 1}}},
                        Want{lucas::Quartic::PlusFive, {}}}) {
    const auto got = lucas::quartic_solutions(w.variant, 10'000);
    bool same = got.size() == w.sols.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].x == w.sols[i].first && got[i].y == w.sols[i].second;
    }
    o.ok = o.ok && same;
    o.detail += lucas::quartic_name(w.variant) + ":" +
                std::to_string(got.size()) + " ";
  }
  return o;
}

Outcome pell_parametrization() {
  Outcome o;
  int members = 0;
  for (int sign : {1, -1}) {
    for (const auto& s : lucas::pell5_family(sign, sign == 1 ? 21 : 20)) {
      const int expected = (*s.z % 2 == 0) ? 1 : -1;
      o.ok = o.ok && *s.z <= 40 && s.u * s.u - 5 * s.v * s.v == expected;
      ++members;
    }
    const auto family = lucas::pell5_family_upto(sign, 1'000'000);
    const auto scan = lucas::pell5_enumerate(sign, 1'000'000);
    bool same = family.size() == scan.size();
    for (std::size_t i = 0; same && i < scan.size(); ++i) {
      same = family[i].u == scan[i].u && family[i].v == scan[i].v;
    }
    o.ok = o.ok && same;
    o.detail += "sign " + std::to_string(sign) + ": scan " +
                std::to_string(scan.size()) + " = family " +
                std::to_string(family.size()) + "; ";
  }
  o.detail += std::to_string(members) + " members z <= 40";
  return o;
}

Outcome form_parametrization() {
  Outcome o;
  bool witness = false;
  for (int c : {-5, -1}) {
    for (const auto& s : lucas::form_family(c, 20)) {
      o.ok = o.ok && s.x * s.x - 4 * s.x * s.y - s.y * s.y == c;
      if (c == -1 && s.x == 72 && s.y == 17) witness = true;
    }
    const auto family = lucas::form_family_upto(c, 100'000);
    const auto scan = lucas::form_enumerate(c, 100'000);
    bool same = family.size() == scan.size();
    for (std::size_t i = 0; same && i < scan.size(); ++i) {
      same = family[i].x == scan[i].x && family[i].y == scan[i].y;
    }
    o.ok = o.ok && same;
    o.detail += "c " + std::to_string(c) + ": scan " +
                std::to_string(scan.size()) + " = family " +
                std::to_string(family.size()) + "; ";
  }
  o.ok = o.ok && witness;
  o.detail += witness ? "(72,17) present" : "(72,17) missing";
  return o;
}

Outcome identity_sweep() {
  Outcome o;
  lucas::SweepConfig cfg = lucas::sweep_config(lucas::Profile::Quick);
  Index checks = 0;
  Index failed = 0;
  for (const TheoremReport& r : lucas::run_sweeps(cfg, lucas::exact_engine())) {
    checks += r.checks_run;
    failed += r.failed_count;
    if (r.failed_count > 0) {
      o.detail += r.theorem_id + " failed " + std::to_string(r.failed_count) +
                  " [" + report_witness(r) + "] ";
    }
  }
  o.ok = failed == 0;
  o.detail = std::to_string(checks) + " checks, " + std::to_string(failed) +
             " failures " + o.detail;
  return o;
}

Outcome verify_expect(const std::string& id, const Box& box,
                      const std::vector<std::pair<long, Index>>& expected) {
  const TheoremReport r = lucas::verify_theorem(id, box);
  std::vector<std::pair<long, Index>> got;
  for (const auto& f : r.found) got.emplace_back(f.p.get_si(), f.n);
  Outcome o;
  o.ok = r.verdict == Verdict::Consistent && got == expected;
  o.detail = id + " over " + std::to_string(box.p_values.size()) +
             " P: found " + join_findings(r.found);
  if (!o.ok) o.detail += " [" + report_witness(r) + "]";
  return o;
}

Outcome t33() {
  return verify_expect(
      "t3.3",
      box_where("t3.3", 99, 300, 1,
                [](long p) { return odd(p) && p % 5 == 0; }, "odd 5|P <= 99"),
      {{5, 1}, {45, 1}});
}

Outcome t34() {
  return verify_expect(
      "t3.4",
      box_where("t3.4", 45, 200, 100,
                [](long p) { return odd(p) && p % 5 == 0; }, "odd 5|P <= 45"),
      {});
}

Outcome t36() {
  Outcome a = verify_expect(
      "t3.6",
      box_where("t3.6", 95, 400, 1,
                [](long p) { return odd(p) && p % 5 == 0; }, "odd 5|P <= 95"),
      {{5, 2}, {45, 2}});
  Outcome b = verify_expect(
      "t3.6",
      box_where("t3.6", 99, 400, 1, [](long p) { return p2mod5(p) == 1; },
                "P^2 = 1 mod 5, P <= 99"),
      {{1, 5}});
  Outcome c = verify_expect(
      "t3.6",
      box_where("t3.6", 99, 400, 1,
                [](long p) { return odd(p) && p2mod5(p) == 4; },
                "odd P^2 = -1 mod 5, P <= 99"),
      {});
  return Outcome{a.ok && b.ok && c.ok, "(a) " + a.detail + "; (b) " +
                                           b.detail + "; (c) " + c.detail};
}

Outcome t37() {
  const Box box = lucas::hypothesis_box("t3.7", 45, false, 200, 100);
  return verify_expect("t3.7", box, {});
}

Outcome cited_classifications() {
  Box p1;
  p1.p_values = {Integer(1)};
  p1.p_spec = "1";
  p1.n_max = 1000;
  p1.m_max = 1;
  const TheoremReport fl = lucas::verify_theorem("fl-squares", p1);
  const TheoremReport t23 = lucas::verify_theorem(
      "t2.3", lucas::hypothesis_box("t2.3", 30, false, 120, 60));
  Outcome o;
  o.ok = fl.verdict == Verdict::Consistent &&
         t23.verdict == Verdict::Consistent;
  o.detail = "P=1 n<=1000: " + lucas::verdict_name(fl.verdict) +
             " with " + std::to_string(fl.found.size()) +
             " findings; U_n=w x^2 P<=30 n<=120: " +
             lucas::verdict_name(t23.verdict);
  if (fl.verdict != Verdict::Consistent) o.detail += " [" + report_witness(fl) + "]";
  if (t23.verdict != Verdict::Consistent) {
    o.detail += " [" + report_witness(t23) + "]";
  }
  return o;
}

Outcome two_u_m_witness() {
  const lucas::SequenceParams p5(5, 1);
  const Integer u12 = lucas::u(p5, 12);
  const Integer u6 = lucas::u(p5, 6);
  const bool identity = u12 == 2 * u6 * 99 * 99;
  const TheoremReport r = lucas::verify_theorem(
      "T2.9", box_where("T2.9", 25, 100, 50, odd, "odd P <= 25"));
  Outcome o;
  o.ok = identity && r.verdict == Verdict::Consistent;
  o.detail = std::string("U_12(5) = 2 U_6(5) 99^2: ") +
             (identity ? "yes" : "no") + "; found " + join_findings(r.found);
  if (r.verdict != Verdict::Consistent) o.detail += " [" + report_witness(r) + "]";
  return o;
}

Outcome fault_injection() {
  using Component = lucas::PerturbedEngine::Component;
  Outcome o;
  int faults = 0;
  int caught = 0;
  std::string missed;
  for (long p : {1L, 2L, 3L, 5L}) {
    lucas::SweepConfig cfg;
    cfg.p_values = {Integer(p)};
    cfg.shift_max = 4;
    cfg.far_m_max = 2;
    cfg.far_r_max = 1;
    cfg.pow2_k_max = 4;
    cfg.residue_m_max = 3;
    cfg.lucas_pow2_k_max = 1;
    cfg.jacobi_r_max = 4;
    cfg.pell_bound = cfg.form_bound = cfg.pell3_bound = 100;
    cfg.quartic_bound = 10;
    cfg.pythagorean_bound = 10;
    Index baseline = 0;
    for (const auto& r : lucas::run_sweeps(cfg, lucas::exact_engine())) {
      baseline += r.failed_count;
    }
    const lucas::SequenceParams params(p, 1);
    for (Index n = 1; n <= 12; ++n) {
      for (Component comp : {Component::U, Component::V}) {
        const lucas::PerturbedEngine eng(lucas::exact_engine(), params, n,
                                         comp);
        Index failed = 0;
        for (const auto& r : lucas::run_sweeps(cfg, eng)) {
          failed += r.failed_count;
        }
        ++faults;
        if (failed > baseline) {
          ++caught;
        } else {
          missed += " P=" + std::to_string(p) + " n=" + std::to_string(n) +
                    (comp == Component::U ? " U" : " V");
        }
      }
    }
  }
  o.ok = caught == faults;
  o.detail = std::to_string(caught) + "/" + std::to_string(faults) +
             " single-value faults detected" +
             (missed.empty() ? "" : "; missed" + missed);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "quartic fixtures", 5, quartic_fixtures},
      {2, "pell parametrization", 10, pell_parametrization},
      {3, "form parametrization", 10, form_parametrization},
      {4, "identity sweep", 30, identity_sweep},
      {5, "V_n = 5x^2", 60, t33},
      {6, "V_n = 5V_m x^2", 60, t34},
      {7, "U_n = 5x^2", 120, t36},
      {8, "U_n = 5U_m x^2", 120, t37},
      {9, "cited classifications", 60, cited_classifications},
      {10, "U_n = 2U_m x^2 witness", 30, two_u_m_witness},
      {11, "fault injection", 10, fault_injection},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %2d %-24s %7.2fs (limit %.0fs)%s  %s\n",
                pass ? "PASS" : "FAIL", c.number, c.name, secs,
                c.limit_seconds, in_time ? "" : " TIMEOUT", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
