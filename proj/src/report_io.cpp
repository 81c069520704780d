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

#include "lucas/report_io.hpp"

#include <sstream>
#include <utility>

#include "lucas/error.hpp"

namespace lucas {
namespace {

std::string str(Index v) { return std::to_string(v); }

Index parse_index(const Json& j) {
  const Integer v = parse_integer(j.get<std::string>());
  if (!v.fits_slong_p()) throw InvalidInput("index out of range: " + v.get_str());
  return v.get_si();
}

unsigned parse_weight(const Json& j) {
  const Integer v = parse_integer(j.get<std::string>());
  if (v < 1 || !v.fits_uint_p()) throw InvalidInput("bad w: " + v.get_str());
  return static_cast<unsigned>(v.get_ui());
}

template <typename T, typename F>
Json array_of(const std::vector<T>& items, F&& convert) {
  Json a = Json::array();
  for (const T& item : items) a.push_back(convert(item));
  return a;
}

std::string finding_row(const SquareClassFinding& f, char sep) {
  std::ostringstream os;
  os << family_name(f.family) << sep << f.p.get_str() << sep << f.n << sep
     << (f.m ? str(*f.m) : (sep == ',' ? "" : "-")) << sep << f.w << sep
     << f.x.get_str();
  return os.str();
}

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Integer parse_integer(const std::string& text) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw InvalidInput("not a decimal integer: '" + text + "'");
  }
  return v;
}

Json to_json(const SquareClassFinding& f) {
  Json j;
  j["family"] = family_name(f.family);
  j["P"] = f.p.get_str();
  j["n"] = str(f.n);
  if (f.m) j["m"] = str(*f.m);
  j["w"] = std::to_string(f.w);
  j["x"] = f.x.get_str();
  return j;
}

Json to_json(const SquareClassQuery& q) {
  Json j;
  j["family"] = family_name(q.family);
  j["w"] = array_of(q.weights, [](unsigned w) { return std::to_string(w); });
  j["P"] = array_of(q.p_values, [](const Integer& p) { return p.get_str(); });
  j["P_spec"] = q.p_spec;
  j["n_max"] = str(q.n_max);
  if (is_two_term(q.family)) {
    j["m_min"] = str(q.m_min);
    if (q.m_max) j["m_max"] = str(*q.m_max);
  }
  return j;
}

Json to_json(const CheckOutcome& c) {
  Json j;
  j["check_id"] = c.check_id;
  Json inputs = Json::object();
  for (const auto& [name, value] : c.inputs) inputs[name] = value.get_str();
  j["inputs"] = std::move(inputs);
  j["passed"] = c.passed;
  j["lhs"] = c.lhs.get_str();
  j["rhs"] = c.rhs.get_str();
  j["note"] = c.note;
  return j;
}

Json to_json(const TheoremReport& r) {
  auto conv = [](const auto& x) { return to_json(x); };
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["query"] = array_of(r.queries, conv);
  j["predicted"] = array_of(r.predicted, conv);
  j["found"] = array_of(r.found, conv);
  j["verdict"] = verdict_name(r.verdict);
  j["notes"] = r.notes;
  j["checks_run"] = str(r.checks_run);
  j["failed_count"] = str(r.failed_count);
  j["failed_checks"] = array_of(r.failed_checks, conv);
  return j;
}

SquareClassFinding finding_from_json(const Json& j) {
  return guarded("finding", [&] {
    SquareClassFinding f;
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw InvalidInput("unknown family in finding");
    f.family = *family;
    f.p = parse_integer(j.at("P").get<std::string>());
    f.n = parse_index(j.at("n"));
    if (j.contains("m")) f.m = parse_index(j.at("m"));
    f.w = parse_weight(j.at("w"));
    f.x = parse_integer(j.at("x").get<std::string>());
    return f;
  });
}

SquareClassQuery query_from_json(const Json& j) {
  return guarded("query", [&] {
    SquareClassQuery q;
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw InvalidInput("unknown family in query");
    q.family = *family;
    for (const Json& w : j.at("w")) q.weights.push_back(parse_weight(w));
    for (const Json& p : j.at("P")) {
      q.p_values.push_back(parse_integer(p.get<std::string>()));
    }
    q.p_spec = j.at("P_spec").get<std::string>();
    q.n_max = parse_index(j.at("n_max"));
    if (j.contains("m_min")) q.m_min = parse_index(j.at("m_min"));
    if (j.contains("m_max")) q.m_max = parse_index(j.at("m_max"));
    return q;
  });
}

CheckOutcome check_from_json(const Json& j) {
  return guarded("check", [&] {
    CheckOutcome c;
    c.check_id = j.at("check_id").get<std::string>();
    for (const auto& [name, value] : j.at("inputs").items()) {
      c.inputs.emplace_back(name, parse_integer(value.get<std::string>()));
    }
    c.passed = j.at("passed").get<bool>();
    c.lhs = parse_integer(j.at("lhs").get<std::string>());
    c.rhs = parse_integer(j.at("rhs").get<std::string>());
    c.note = j.at("note").get<std::string>();
    return c;
  });
}

TheoremReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    TheoremReport r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    for (const Json& q : j.at("query")) r.queries.push_back(query_from_json(q));
    for (const Json& f : j.at("predicted")) {
      r.predicted.push_back(finding_from_json(f));
    }
    for (const Json& f : j.at("found")) r.found.push_back(finding_from_json(f));
    const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!verdict) throw InvalidInput("unknown verdict in report");
    r.verdict = *verdict;
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.checks_run = parse_index(j.at("checks_run"));
    r.failed_count = parse_index(j.at("failed_count"));
    for (const Json& c : j.at("failed_checks")) {
      r.failed_checks.push_back(check_from_json(c));
    }
    return r;
  });
}

std::string findings_table(const std::vector<SquareClassFinding>& findings) {
  if (findings.empty()) return "no findings\n";
  std::string out = "family P n m w x\n";
  for (const auto& f : findings) out += finding_row(f, ' ') + "\n";
  return out;
}

std::string findings_csv(const std::vector<SquareClassFinding>& findings) {
  std::string out = "family,P,n,m,w,x\n";
  for (const auto& f : findings) out += finding_row(f, ',') + "\n";
  return out;
}

std::string report_table(const TheoremReport& r) {
  std::ostringstream os;
  const std::string verdict = verdict_name(r.verdict);
  os << r.theorem_id << ": ";
  if (r.queries.empty()) {
    os << r.checks_run << " checks, " << r.failed_count << " failed";
  } else if (r.found.empty()) {
    os << "no findings (predicted: "
       << (r.predicted.empty() ? std::string("none")
                               : std::to_string(r.predicted.size()))
       << ")";
  } else {
    os << r.found.size() << " findings (predicted: "
       << (r.predicted.empty() ? std::string("none")
                               : std::to_string(r.predicted.size()))
       << ")";
  }
  os << " — " << verdict << "\n";
  for (const auto& f : r.found) os << "  found " << finding_row(f, ' ') << "\n";
  for (const auto& f : r.predicted) {
    os << "  predicted " << finding_row(f, ' ') << "\n";
  }
  for (const auto& c : r.failed_checks) {
    os << "  failed " << c.check_id;
    for (const auto& [name, value] : c.inputs) {
      os << " " << name << "=" << value.get_str();
    }
    os << " lhs=" << c.lhs.get_str() << " rhs=" << c.rhs.get_str();
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  for (const auto& n : r.notes) os << "  note " << n << "\n";
  return os.str();
}

std::string reports_csv(const std::vector<TheoremReport>& reports) {
  std::string out =
      "theorem_id,verdict,predicted,found,checks_run,failed_count\n";
  for (const auto& r : reports) {
    out += r.theorem_id + "," + verdict_name(r.verdict) + "," +
           std::to_string(r.predicted.size()) + "," +
           std::to_string(r.found.size()) + "," + str(r.checks_run) + "," +
           str(r.failed_count) + "\n";
  }
  return out;
}

}  // namespace lucas
