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

#include "lucas/harness.hpp"

#include <exception>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "lucas/diophantine.hpp"
#include "lucas/error.hpp"
#include "lucas/identities.hpp"

namespace lucas {
namespace {

class Recorder {
 public:
  Recorder(std::string id, std::size_t keep) : keep_(keep) {
    report_.theorem_id = std::move(id);
  }

  void add(CheckOutcome c) {
    ++report_.checks_run;
    if (c.passed) return;
    ++report_.failed_count;
    if (report_.failed_checks.size() < keep_) {
      report_.failed_checks.push_back(std::move(c));
    }
  }

  template <typename F>
  void run(const char* label, F&& check) {
    try {
      auto result = check();
      if constexpr (std::is_same_v<decltype(result), CheckOutcome>) {
        add(std::move(result));
      } else {
        for (CheckOutcome& c : result) add(std::move(c));
      }
    } catch (const std::exception& e) {
      CheckOutcome c;
      c.check_id = label;
      c.passed = false;
      c.note = std::string("threw: ") + e.what();
      add(std::move(c));
    }
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  TheoremReport finish() {
    report_.verdict = report_.failed_count == 0 ? Verdict::Consistent
                                                : Verdict::Counterexample;
    return std::move(report_);
  }

 private:
  TheoremReport report_;
  std::size_t keep_;
};

bool odd(const Integer& p) { return mpz_odd_p(p.get_mpz_t()) != 0; }

std::string p_summary(const SweepConfig& cfg) {
  if (cfg.p_values.empty()) return "no P";
  if (cfg.p_values.size() == 1) return "P = " + cfg.p_values.front().get_str();
  return "P in " + cfg.p_values.front().get_str() + ".." +
         cfg.p_values.back().get_str();
}

template <typename Solution, typename Key>
CheckOutcome dual_check(const char* id, const std::vector<Solution>& family,
                        const std::vector<Solution>& scan, Key key,
                        const std::string& bound_name, const Integer& bound) {
  CheckOutcome c;
  c.check_id = id;
  c.inputs.emplace_back(bound_name, bound);
  c.lhs = static_cast<unsigned long>(family.size());
  c.rhs = static_cast<unsigned long>(scan.size());
  c.passed = family.size() == scan.size();
  for (std::size_t i = 0; c.passed && i < family.size(); ++i) {
    if (key(family[i]) != key(scan[i])) {
      c.passed = false;
      c.note = "first difference at position " + std::to_string(i);
    }
  }
  if (!c.passed && c.note.empty()) c.note = "solution counts differ";
  return c;
}

}  // namespace

std::string profile_name(Profile profile) {
  return profile == Profile::Quick ? "quick" : "full";
}

std::optional<Profile> parse_profile(const std::string& name) {
  if (name == "quick") return Profile::Quick;
  if (name == "full") return Profile::Full;
  return std::nullopt;
}

ProfileBounds profile_bounds(Profile profile) {
  if (profile == Profile::Quick) return {25, 120, 60};
  return {99, 400, 200};
}

Box profile_box(const std::string& id, Profile profile) {
  const ProfileBounds b = profile_bounds(profile);
  return hypothesis_box(id, b.p_max, false, b.n_max, b.m_max);
}

SweepConfig sweep_config(Profile profile) {
  SweepConfig cfg;
  const ProfileBounds b = profile_bounds(profile);
  for (Index p = 1; p <= b.p_max; ++p) cfg.p_values.emplace_back(p);
  if (profile == Profile::Full) {
    cfg.residue_m_max = 10'001;
    cfg.pell_bound = 1'000'000;
    cfg.form_bound = 100'000;
    cfg.pell3_bound = 100'000;
  }
  return cfg;
}

TheoremReport sweep_shift(const SweepConfig& cfg, const SequenceEngine& eng) {
  Recorder rec("sweep.shift", cfg.keep_failures);
  const Index k = cfg.shift_max;
  for (const Integer& p : cfg.p_values) {
    const SequenceParams params(p, 1);
    for (Index m = -k; m <= k; ++m) {
      for (Index n = -k; n <= k; ++n) {
        if (n == 0) continue;
        for (Index r = -k; r <= k; ++r) {
          if (m != 0) {
            rec.run("shift_U_mod_U", [&] {
              return check_shift_U_mod_U(params, m, n, r, eng);
            });
            rec.run("shift_V_mod_U", [&] {
              return check_shift_V_mod_U(params, m, n, r, eng);
            });
          }
          rec.run("shift_U_mod_V", [&] {
            return check_shift_U_mod_V(params, m, n, r, eng);
          });
          rec.run("shift_V_mod_V", [&] {
            return check_shift_V_mod_V(params, m, n, r, eng);
          });
        }
      }
    }
    for (Index m = 1; m <= cfg.far_m_max; ++m) {
      for (Index r = -cfg.far_r_max; r <= cfg.far_r_max; ++r) {
        const Index n = cfg.far_n;
        rec.run("shift_U_mod_U", [&] {
          return check_shift_U_mod_U(params, m, n, r, eng);
        });
        rec.run("shift_V_mod_U", [&] {
          return check_shift_V_mod_U(params, m, n, r, eng);
        });
        rec.run("shift_U_mod_V", [&] {
          return check_shift_U_mod_V(params, m, n, r, eng);
        });
        rec.run("shift_V_mod_V", [&] {
          return check_shift_V_mod_V(params, m, n, r, eng);
        });
      }
    }
  }
  rec.note(p_summary(cfg) + ", |m|, |n|, |r| <= " + std::to_string(k) +
           ", plus n = " + std::to_string(cfg.far_n) + " modular");
  return rec.finish();
}

TheoremReport sweep_products(const SweepConfig& cfg,
                             const SequenceEngine& eng) {
  Recorder rec("sweep.products", cfg.keep_failures);
  const Index k = cfg.index_max;
  for (const Integer& p : cfg.p_values) {
    const SequenceParams params(p, 1);
    const bool five_divides = mpz_divisible_ui_p(p.get_mpz_t(), 5) != 0;
    for (Index n = -k; n <= k; ++n) {
      rec.run("product_identities",
              [&] { return check_product_identities(params, n, eng); });
      if (p >= 3) {
        rec.run("triple_u_qminus1",
                [&] { return check_q_minus_one_triple(p, n, eng); });
      }
      if (five_divides && (n & 1) != 0) {
        rec.run("v5n_factor", [&] { return check_v5n_factor(params, n, eng); });
      }
    }
  }
  rec.note(p_summary(cfg) + ", |n| <= " + std::to_string(k));
  return rec.finish();
}

TheoremReport sweep_divisibility(const SweepConfig& cfg,
                                 const SequenceEngine& eng) {
  Recorder rec("sweep.divisibility", cfg.keep_failures);
  const Index k = cfg.index_max;
  for (const Integer& p : cfg.p_values) {
    const SequenceParams params(p, 1);
    for (Index n = 1; n <= k; ++n) {
      for (Index m = 1; m <= k; ++m) {
        rec.run("divisibility_laws",
                [&] { return check_divisibility_laws(params, m, n, eng); });
      }
      if (odd(p)) {
        rec.run("gcd_U_V", [&] { return check_gcd_U_V(params, n, eng); });
      }
      rec.run("div_by_5_and_3",
              [&] { return check_divisibility_by_5_and_3(params, n, eng); });
    }
  }
  rec.note(p_summary(cfg) + ", 1 <= m, n <= " + std::to_string(k));
  return rec.finish();
}

TheoremReport sweep_residues(const SweepConfig& cfg,
                             const SequenceEngine& eng) {
  Recorder rec("sweep.residues", cfg.keep_failures);
  const Index k = cfg.index_max;
  for (const Integer& p : cfg.p_values) {
    const SequenceParams params(p, 1);
    if (odd(p)) {
      for (Index r = 1; r <= 6; ++r) {
        for (Index m = 1; m <= k; m += 2) {
          rec.run("v_mod8_class",
                  [&] { return check_v_mod8_class(params, r, m, eng); });
        }
      }
    }
    for (Index n = 1; n <= k; ++n) {
      rec.run("mod_p2_laws", [&] { return check_mod_p2_laws(params, n, eng); });
    }
  }
  for (Index j = 1; j <= cfg.pow2_k_max; ++j) {
    rec.run("lucas_pow2_mod4", [&] { return check_lucas_pow2_mod4(j, eng); });
  }
  rec.note(p_summary(cfg) + ", n <= " + std::to_string(k) +
           ", L_{2^k} mod 4 for k <= " + std::to_string(cfg.pow2_k_max));
  return rec.finish();
}

TheoremReport sweep_jacobi(const SweepConfig& cfg, const SequenceEngine& eng) {
  Recorder rec("sweep.jacobi", cfg.keep_failures);
  for (std::uint64_t m = 3; m <= cfg.residue_m_max; m += 2) {
    rec.run("minus_square_residue",
            [&] { return check_minus_square_residue(m); });
  }
  for (Index j = 1; j <= cfg.lucas_pow2_k_max; ++j) {
    rec.run("lucas_pow2_no_minus_square",
            [&] { return check_lucas_pow2_no_minus_square(j, eng); });
  }
  for (const Integer& p : cfg.p_values) {
    if (!odd(p)) continue;
    const SequenceParams params(p, 1);
    for (Index r = 1; r <= cfg.jacobi_r_max; ++r) {
      rec.run("jacobi_p2plus3",
              [&] { return check_jacobi_p2plus3(params, r, eng); });
    }
  }
  rec.note("odd m <= " + std::to_string(cfg.residue_m_max) + ", " +
           p_summary(cfg) + ", r <= " + std::to_string(cfg.jacobi_r_max));
  return rec.finish();
}

TheoremReport sweep_diophantine(const SweepConfig& cfg,
                                const SequenceEngine& eng) {
  Recorder rec("sweep.diophantine", cfg.keep_failures);
  auto pell_key = [](const PellSolution& s) { return std::pair(s.u, s.v); };
  auto form_key = [](const FormSolution& s) { return std::pair(s.x, s.y); };
  auto pell3_key = [](const Pell3Solution& s) { return std::pair(s.b, s.c); };

  for (int sign : {1, -1}) {
    const char* id = sign == 1 ? "pell5_plus" : "pell5_minus";
    rec.run(id, [&] {
      return dual_check(id, pell5_family_upto(sign, cfg.pell_bound, eng),
                        pell5_enumerate(sign, cfg.pell_bound), pell_key,
                        "v_max", cfg.pell_bound);
    });
  }
  for (int c : {-5, -1}) {
    const char* id = c == -5 ? "form_minus5" : "form_minus1";
    rec.run(id, [&] {
      return dual_check(id, form_family_upto(c, cfg.form_bound, eng),
                        form_enumerate(c, cfg.form_bound), form_key, "y_max",
                        cfg.form_bound);
    });
  }
  rec.run("pell3", [&] {
    return dual_check("pell3", pell3_family_upto(cfg.pell3_bound, eng),
                      pell3_enumerate(cfg.pell3_bound), pell3_key, "c_max",
                      cfg.pell3_bound);
  });

  struct Expect {
    Quartic variant;
    std::vector<std::pair<int, int>> solutions;
  };
  const std::vector<Expect> quartics = {
      {Quartic::PlusThree, {{1, 1}}},
      {Quartic::MinusThree, {{2, 1}}},
      {Quartic::PlusFive, {}},
  };
  for (const Expect& e : quartics) {
    rec.run("quartic", [&] {
      const auto found = quartic_solutions(e.variant, cfg.quartic_bound);
      CheckOutcome c;
      c.check_id = "quartic_" + quartic_name(e.variant);
      c.inputs.emplace_back("x_max", cfg.quartic_bound);
      c.lhs = static_cast<unsigned long>(found.size());
      c.rhs = static_cast<unsigned long>(e.solutions.size());
      c.passed = found.size() == e.solutions.size();
      for (std::size_t i = 0; c.passed && i < found.size(); ++i) {
        c.passed = found[i].x == e.solutions[i].first &&
                   found[i].y == e.solutions[i].second;
      }
      return c;
    });
  }
  rec.run("pythagorean_identity", [&] {
    CheckOutcome c;
    c.check_id = "pythagorean_identity";
    c.inputs.emplace_back("y_max", cfg.pythagorean_bound);
    const auto bad = pythagorean_identity_failure(cfg.pythagorean_bound);
    c.lhs = bad ? *bad : Integer(-1);
    c.rhs = -1;
    c.passed = !bad;
    return c;
  });
  rec.note("v <= " + cfg.pell_bound.get_str() + ", y <= " +
           cfg.form_bound.get_str() + ", c <= " + cfg.pell3_bound.get_str() +
           ", quartic x <= " + cfg.quartic_bound.get_str());
  return rec.finish();
}

std::vector<TheoremReport> run_sweeps(const SweepConfig& cfg,
                                      const SequenceEngine& eng) {
  std::vector<TheoremReport> out;
  out.push_back(sweep_shift(cfg, eng));
  out.push_back(sweep_products(cfg, eng));
  out.push_back(sweep_divisibility(cfg, eng));
  out.push_back(sweep_residues(cfg, eng));
  out.push_back(sweep_jacobi(cfg, eng));
  out.push_back(sweep_diophantine(cfg, eng));
  return out;
}

std::vector<TheoremReport> verify_all(Profile profile,
                                      const SequenceEngine& eng,
                                      unsigned jobs) {
  std::vector<TheoremReport> out;
  for (const std::string& id : search_theorem_ids()) {
    out.push_back(verify_theorem(id, profile_box(id, profile), eng, jobs));
  }
  for (TheoremReport& r : run_sweeps(sweep_config(profile), eng)) {
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lucas
