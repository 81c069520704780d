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

// Rendering of findings and reports as JSON, CSV and plain tables, and
// parsing of the JSON form back into reports.
//
// JSON carries every integer as a decimal string. CSV columns:
//   findings  family,P,n,m,w,x           (m empty for one-term families)
//   reports   theorem_id,verdict,predicted,found,checks_run,failed_count

#ifndef LUCAS_REPORT_IO_HPP_
#define LUCAS_REPORT_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lucas/classifier.hpp"

namespace lucas {

using Json = nlohmann::ordered_json;

Json to_json(const SquareClassFinding& finding);
Json to_json(const SquareClassQuery& query);
Json to_json(const CheckOutcome& check);
Json to_json(const TheoremReport& report);

/// Inverse of to_json. Throws InvalidInput on a malformed document.
SquareClassFinding finding_from_json(const Json& j);
SquareClassQuery query_from_json(const Json& j);
CheckOutcome check_from_json(const Json& j);
TheoremReport report_from_json(const Json& j);

std::string findings_table(const std::vector<SquareClassFinding>& findings);
std::string findings_csv(const std::vector<SquareClassFinding>& findings);

std::string report_table(const TheoremReport& report);
std::string reports_csv(const std::vector<TheoremReport>& reports);

/// Integer from a decimal string. Throws InvalidInput.
Integer parse_integer(const std::string& text);

}  // namespace lucas

#endif  // LUCAS_REPORT_IO_HPP_
