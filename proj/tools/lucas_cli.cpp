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

// lucas: sequence values, equation solvers, square-class searches and the
// theorem harness from the command line.
//
// Exit codes: 0 consistent, 1 usage error, 2 counterexample or
// family/oracle disagreement, 3 out-of-scope query or flagged finding.

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lucas/classifier.hpp"
#include "lucas/diophantine.hpp"
#include "lucas/error.hpp"
#include "lucas/harness.hpp"
#include "lucas/report_io.hpp"
#include "lucas/sequence.hpp"
#include "p_spec.hpp"

namespace {

using lucas::Index;
using lucas::Integer;
using lucas::InvalidInput;
using lucas::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitOutOfScope = 3;

struct Common {
  std::string format = "table";
  std::string out_path;
  unsigned jobs = 1;
};

struct Result {
  std::string text;
  int code = kExitOk;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- seq -------------------------------------------------------------------

struct SeqArgs {
  std::string p;
  int q = 1;
  std::optional<Index> n;
  std::string range;
  std::string modulus;
};

std::pair<Index, Index> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw InvalidInput("range must look like LO..HI, got '" + text + "'");
  }
  const Integer lo = lucas::parse_integer(text.substr(0, dots));
  const Integer hi = lucas::parse_integer(text.substr(dots + 2));
  if (!lo.fits_slong_p() || !hi.fits_slong_p()) {
    throw InvalidInput("range bounds out of range: '" + text + "'");
  }
  return {lo.get_si(), hi.get_si()};
}

Result run_seq(const SeqArgs& a, const Common& c) {
  const lucas::SequenceParams params(lucas::parse_integer(a.p), a.q);
  if (a.n.has_value() == !a.range.empty()) {
    throw InvalidInput("give exactly one of -n and --range");
  }
  const auto [lo, hi] = a.n ? std::pair{*a.n, *a.n} : parse_range(a.range);
  if (lo > hi) throw InvalidInput("range is empty: LO > HI");
  if (hi - lo >= 1'000'000) throw InvalidInput("range longer than 10^6 rows");

  std::vector<std::array<std::string, 3>> rows;
  std::optional<Integer> modulus;
  if (!a.modulus.empty()) modulus = lucas::parse_integer(a.modulus);
  if (modulus) {
    for (Index n = lo; n <= hi; ++n) {
      const lucas::ModularPair m = lucas::pair_mod(params, n, *modulus);
      rows.push_back({std::to_string(n), m.u_res.get_str(), m.v_res.get_str()});
    }
  } else {
    for (const lucas::IndexedPair& pair : lucas::seq_range(params, lo, hi)) {
      rows.push_back({std::to_string(pair.n), pair.u.get_str(),
                      pair.v.get_str()});
    }
  }

  Result r;
  if (c.format == "json") {
    Json j;
    j["P"] = params.p().get_str();
    j["Q"] = std::to_string(params.q());
    if (modulus) j["modulus"] = modulus->get_str();
    Json list = Json::array();
    for (const auto& row : rows) {
      list.push_back({{"n", row[0]}, {"U", row[1]}, {"V", row[2]}});
    }
    j["rows"] = std::move(list);
    r.text = dump(j);
  } else {
    const char sep = c.format == "csv" ? ',' : ' ';
    r.text = std::string("n") + sep + "U" + sep + "V\n";
    for (const auto& row : rows) {
      r.text += row[0] + sep + row[1] + sep + row[2] + "\n";
    }
  }
  return r;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string equation;
  int sign = 1;
  int c = -5;
  Index count = 5;
  std::string bound;  // oracle bound override
  std::string variant = "plus3";
  std::string xmax = "10000";
};

struct Row {
  std::string source;  // family or oracle
  std::optional<Index> z;
  Integer a;
  Integer b;
};

template <typename S, typename Key>
bool same_pairs(const std::vector<S>& x, const std::vector<S>& y, Key key) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (key(x[i]) != key(y[i])) return false;
  }
  return true;
}

Result render_solve(const std::string& equation, const Json& params,
                    const std::vector<Row>& rows, const char* a_name,
                    const char* b_name, std::optional<bool> agree,
                    const std::optional<Integer>& oracle_bound,
                    const Common& c) {
  Result r;
  if (agree && !*agree) r.code = kExitCounterexample;
  if (c.format == "json") {
    Json j;
    j["equation"] = equation;
    j["params"] = params;
    Json family = Json::array();
    Json oracle = Json::array();
    for (const Row& row : rows) {
      Json e;
      if (row.z) e["z"] = std::to_string(*row.z);
      e[a_name] = row.a.get_str();
      e[b_name] = row.b.get_str();
      (row.source == "family" ? family : oracle).push_back(std::move(e));
    }
    if (agree) {
      j["family"] = std::move(family);
      j["oracle"] = std::move(oracle);
      j["oracle_bound"] = oracle_bound->get_str();
      j["agree"] = *agree;
    } else {
      j["solutions"] = std::move(oracle);
    }
    r.text = dump(j);
    return r;
  }
  if (c.format == "csv") {
    r.text = std::string("source,z,") + a_name + "," + b_name + "\n";
    for (const Row& row : rows) {
      r.text += row.source + "," + (row.z ? std::to_string(*row.z) : "") +
                "," + row.a.get_str() + "," + row.b.get_str() + "\n";
    }
    return r;
  }
  std::ostringstream os;
  os << equation;
  for (const auto& [k, v] : params.items()) {
    os << " " << k << "=" << v.get<std::string>();
  }
  os << "\n";
  bool any = false;
  for (const Row& row : rows) {
    if (agree && row.source != "family") continue;
    any = true;
    os << "(" << row.a.get_str() << "," << row.b.get_str() << ")";
    if (row.z) os << " z=" << *row.z;
    os << "\n";
  }
  if (!any) os << "no solutions\n";
  if (agree) {
    os << "family=oracle: " << (*agree ? "yes" : "no") << " (oracle "
       << b_name << " <= " << oracle_bound->get_str() << ")\n";
  }
  r.text = os.str();
  return r;
}

Result run_solve(const SolveArgs& a, const Common& c) {
  std::vector<Row> rows;
  std::optional<Integer> bound;
  if (!a.bound.empty()) bound = lucas::parse_integer(a.bound);

  if (a.equation == "pell5") {
    const auto family = lucas::pell5_family(a.sign, a.count);
    const Integer limit = bound ? *bound : family.back().v;
    const auto oracle = lucas::pell5_enumerate(a.sign, limit);
    std::vector<lucas::PellSolution> in_box;
    for (const auto& s : family) {
      if (s.v <= limit) in_box.push_back(s);
    }
    const bool agree = same_pairs(in_box, oracle, [](const auto& s) {
      return std::pair(s.u, s.v);
    });
    for (const auto& s : family) rows.push_back({"family", s.z, s.u, s.v});
    for (const auto& s : oracle) rows.push_back({"oracle", s.z, s.u, s.v});
    return render_solve("pell5", Json{{"sign", std::to_string(a.sign)}}, rows,
                        "u", "v", agree, limit, c);
  }
  if (a.equation == "form") {
    const auto family = lucas::form_family(a.c, a.count);
    const Integer limit = bound ? *bound : family.back().y;
    const auto oracle = lucas::form_enumerate(a.c, limit);
    std::vector<lucas::FormSolution> in_box;
    for (const auto& s : family) {
      if (s.y <= limit) in_box.push_back(s);
    }
    const bool agree = same_pairs(in_box, oracle, [](const auto& s) {
      return std::pair(s.x, s.y);
    });
    for (const auto& s : family) rows.push_back({"family", s.z, s.x, s.y});
    for (const auto& s : oracle) rows.push_back({"oracle", s.z, s.x, s.y});
    return render_solve("form", Json{{"c", std::to_string(a.c)}}, rows, "x",
                        "y", agree, limit, c);
  }
  if (a.equation == "pell3") {
    const auto family = lucas::pell3_family(a.count);
    const Integer limit = bound ? *bound : family.back().c;
    const auto oracle = lucas::pell3_enumerate(limit);
    std::vector<lucas::Pell3Solution> in_box;
    for (const auto& s : family) {
      if (s.c <= limit) in_box.push_back(s);
    }
    const bool agree = same_pairs(in_box, oracle, [](const auto& s) {
      return std::pair(s.b, s.c);
    });
    for (const auto& s : family) rows.push_back({"family", s.m, s.b, s.c});
    for (const auto& s : oracle) rows.push_back({"oracle", s.m, s.b, s.c});
    return render_solve("pell3", Json::object(), rows, "b", "c", agree, limit,
                        c);
  }
  if (a.equation == "quartic") {
    const auto variant = lucas::parse_quartic(a.variant);
    if (!variant) {
      throw InvalidInput("unknown quartic variant '" + a.variant +
                         "'; valid: plus3 minus3 plus5");
    }
    const Integer xmax = lucas::parse_integer(a.xmax);
    for (const auto& s : lucas::quartic_solutions(*variant, xmax)) {
      rows.push_back({"scan", std::nullopt, s.x, s.y});
    }
    return render_solve(
        "quartic",
        Json{{"variant", a.variant}, {"x_max", xmax.get_str()}}, rows, "x",
        "y", std::nullopt, std::nullopt, c);
  }
  throw InvalidInput("unknown equation '" + a.equation +
                     "'; valid: pell5 form pell3 quartic");
}

// --- search ----------------------------------------------------------------

struct SearchArgs {
  std::string family;
  unsigned w = 1;
  std::string p_spec;
  Index n_max = 0;
  std::optional<Index> m_max;
  Index m_min = 1;
};

Result run_search(const SearchArgs& a, const Common& c) {
  lucas::SquareClassQuery q;
  const auto family = lucas::parse_family(a.family);
  if (!family) {
    throw InvalidInput("unknown family '" + a.family + "'; valid: U V UU VV");
  }
  q.family = *family;
  q.weights = {a.w};
  q.p_values = lucas::parse_p_spec(a.p_spec);
  q.p_spec = a.p_spec;
  q.n_max = a.n_max;
  q.m_min = a.m_min;
  q.m_max = a.m_max;
  const auto findings = lucas::search(q, lucas::exact_engine(), c.jobs);
  Result r;
  if (c.format == "json") {
    Json j;
    j["query"] = lucas::to_json(q);
    Json list = Json::array();
    for (const auto& f : findings) list.push_back(lucas::to_json(f));
    j["found"] = std::move(list);
    r.text = dump(j);
  } else if (c.format == "csv") {
    r.text = lucas::findings_csv(findings);
  } else {
    r.text = lucas::findings_table(findings);
  }
  return r;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string id;
  std::string profile = "quick";
  std::string p_spec;
  std::optional<Index> p_max;
  std::optional<Index> p_odd_max;
  std::optional<Index> n_max;
  std::optional<Index> m_max;
};

int exit_code_for(const std::vector<lucas::TheoremReport>& reports) {
  bool flagged = false;
  for (const auto& r : reports) {
    if (r.verdict == lucas::Verdict::Counterexample) return kExitCounterexample;
    if (r.verdict == lucas::Verdict::OutOfPredictedScope) flagged = true;
  }
  return flagged ? kExitOutOfScope : kExitOk;
}

Result run_verify(const VerifyArgs& a, const Common& c) {
  const auto profile = lucas::parse_profile(a.profile);
  if (!profile) {
    throw InvalidInput("unknown profile '" + a.profile + "'; valid: quick full");
  }
  const int box_flags = (a.p_spec.empty() ? 0 : 1) + (a.p_max ? 1 : 0) +
                        (a.p_odd_max ? 1 : 0);
  if (box_flags > 1) {
    throw InvalidInput("give at most one of --P, --P-max, --P-odd-max");
  }

  std::vector<lucas::TheoremReport> reports;
  if (a.id == "all") {
    if (box_flags > 0 || a.n_max || a.m_max) {
      throw InvalidInput("verify all takes only --profile, not box bounds");
    }
    reports = lucas::verify_all(*profile, lucas::exact_engine(), c.jobs);
  } else {
    if (!lucas::is_known_theorem(a.id)) {
      std::string known;
      for (const auto& k : lucas::search_theorem_ids()) known += " " + k;
      for (const auto& k : lucas::quartic_theorem_ids()) known += " " + k;
      throw InvalidInput("unknown theorem id '" + a.id + "'; valid: all" +
                         known);
    }
    const lucas::ProfileBounds b = lucas::profile_bounds(*profile);
    const Index n_max = a.n_max.value_or(b.n_max);
    const Index m_max = a.m_max.value_or(std::min(b.m_max, n_max));
    lucas::Box box;
    const bool quartic =
        std::find(lucas::quartic_theorem_ids().begin(),
                  lucas::quartic_theorem_ids().end(),
                  a.id) != lucas::quartic_theorem_ids().end();
    if (!quartic) {
      if (!a.p_spec.empty()) {
        box.p_values = lucas::parse_p_spec(a.p_spec);
        box.p_spec = a.p_spec;
        box.n_max = n_max;
        box.m_max = m_max;
      } else if (a.p_max || a.p_odd_max) {
        box = lucas::hypothesis_box(a.id, a.p_max ? *a.p_max : *a.p_odd_max,
                                    a.p_odd_max.has_value(), n_max, m_max);
      } else {
        box = lucas::hypothesis_box(a.id, b.p_max, false, n_max, m_max);
      }
    }
    reports.push_back(
        lucas::verify_theorem(a.id, box, lucas::exact_engine(), c.jobs));
  }

  Result r;
  r.code = exit_code_for(reports);
  if (c.format == "json") {
    if (a.id == "all") {
      Json j;
      j["profile"] = a.profile;
      Json list = Json::array();
      for (const auto& rep : reports) list.push_back(lucas::to_json(rep));
      j["reports"] = std::move(list);
      r.text = dump(j);
    } else {
      r.text = dump(lucas::to_json(reports.front()));
    }
  } else if (c.format == "csv") {
    r.text = lucas::reports_csv(reports);
  } else {
    if (a.id == "all") r.text = "profile " + a.profile + "\n";
    for (const auto& rep : reports) r.text += lucas::report_table(rep);
  }
  return r;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write output to FILE")
      ->option_text("FILE");
  sub->add_option("--jobs", c.jobs, "Worker threads for searches")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lucas sequence square-class toolkit"};
  app.require_subcommand(1);

  Common common;
  SeqArgs seq_args;
  SolveArgs solve_args;
  SearchArgs search_args;
  VerifyArgs verify_args;

  auto* seq = app.add_subcommand("seq", "U_n and V_n for one index or a range");
  seq->add_option("-P,--P", seq_args.p, "P >= 1")->required();
  seq->add_option("-Q,--Q", seq_args.q, "Q, 1 or -1")->capture_default_str();
  seq->add_option("-n", seq_args.n, "Single index");
  seq->add_option("--range", seq_args.range, "Index range LO..HI");
  seq->add_option("--mod", seq_args.modulus, "Reduce modulo M >= 2");
  seq->footer("CSV columns: n,U,V");
  add_common(seq, common);

  auto* solve = app.add_subcommand("solve", "Parametric solutions vs scan");
  solve->add_option("equation", solve_args.equation,
                    "pell5 | form | pell3 | quartic")
      ->required();
  solve->add_option("--sign", solve_args.sign, "pell5: right-hand side")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  solve->add_option("--c", solve_args.c, "form: constant, -5 or -1")
      ->check(CLI::IsMember({-5, -1}))
      ->capture_default_str();
  solve->add_option("--count", solve_args.count, "Family members to list")
      ->check(CLI::Range(Index{1}, Index{1000}))
      ->capture_default_str();
  solve->add_option("--vmax,--ymax,--cmax", solve_args.bound,
                    "Oracle scan bound (default: largest family value)");
  solve->add_option("--variant", solve_args.variant,
                    "quartic: plus3 | minus3 | plus5")
      ->capture_default_str();
  solve->add_option("--xmax", solve_args.xmax, "quartic: scan bound")
      ->capture_default_str();
  solve->footer("CSV columns: source,z,a,b (a, b name the unknowns)");
  add_common(solve, common);

  auto* search = app.add_subcommand("search", "Bounded square-class search");
  search->add_option("family", search_args.family, "U | V | UU | VV")
      ->required();
  search->add_option("w", search_args.w, "Square-free coefficient")->required();
  search->add_option("--P", search_args.p_spec,
                     "P set, e.g. 5, 1..25, 1..99:odd, 3,5,7")
      ->required();
  search->add_option("--nmax", search_args.n_max, "Largest n")->required();
  search->add_option("--mmax", search_args.m_max, "Largest m (UU, VV)");
  search->add_option("--mmin", search_args.m_min, "Smallest m (UU, VV)")
      ->capture_default_str();
  search->footer("CSV columns: family,P,n,m,w,x");
  add_common(search, common);

  auto* verify = app.add_subcommand("verify", "Theorem harness");
  verify->add_option("id", verify_args.id, "Theorem id or 'all'")->required();
  verify->add_option("--profile", verify_args.profile, "quick | full")
      ->capture_default_str();
  verify->add_option("--P", verify_args.p_spec, "Explicit P set (strict)");
  verify->add_option("--P-max", verify_args.p_max,
                     "P in 1..N meeting the hypotheses");
  verify->add_option("--P-odd-max", verify_args.p_odd_max,
                     "Odd P in 1..N meeting the hypotheses");
  verify->add_option("--nmax", verify_args.n_max, "Largest n");
  verify->add_option("--mmax", verify_args.m_max, "Largest m");
  verify->footer(
      "CSV columns: theorem_id,verdict,predicted,found,checks_run,"
      "failed_count\nExit: 0 consistent, 1 usage, 2 counterexample, "
      "3 out of scope");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Result result;
  try {
    if (seq->parsed()) {
      result = run_seq(seq_args, common);
    } else if (solve->parsed()) {
      result = run_solve(solve_args, common);
    } else if (search->parsed()) {
      result = run_search(search_args, common);
    } else {
      result = run_verify(verify_args, common);
    }
  } catch (const lucas::OutOfScope& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kExitOutOfScope;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (common.out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(common.out_path);
    out << result.text;
    if (!out) {
      std::cerr << "error: cannot write " << common.out_path << "\n";
      return kExitUsage;
    }
  }
  return result.code;
}
