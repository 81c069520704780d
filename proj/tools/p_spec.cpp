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

#include "p_spec.hpp"

#include <algorithm>
#include <sstream>

#include "lucas/error.hpp"
#include "lucas/report_io.hpp"

namespace lucas {

std::vector<Integer> parse_p_spec(const std::string& spec_in) {
  std::string spec = spec_in;
  int parity = -1;  // -1 any, 0 even, 1 odd
  if (const auto colon = spec.rfind(':'); colon != std::string::npos) {
    const std::string filter = spec.substr(colon + 1);
    if (filter == "odd") {
      parity = 1;
    } else if (filter == "even") {
      parity = 0;
    } else {
      throw InvalidInput("P filter must be 'odd' or 'even', got '" + filter +
                         "'");
    }
    spec.resize(colon);
  }
  constexpr long kMaxRange = 1'000'000;
  std::vector<Integer> out;
  std::istringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) throw InvalidInput("empty item in P spec '" + spec_in + "'");
    const auto dots = item.find("..");
    Integer lo = parse_integer(item.substr(0, dots));
    Integer hi = dots == std::string::npos ? lo
                                           : parse_integer(item.substr(dots + 2));
    if (lo < 1) throw InvalidInput("P must be >= 1, got " + lo.get_str());
    if (hi < lo) throw InvalidInput("empty P range '" + item + "'");
    if (hi - lo > kMaxRange) throw InvalidInput("P range too long: '" + item + "'");
    for (Integer p = lo; p <= hi; ++p) {
      if (parity >= 0 && (mpz_odd_p(p.get_mpz_t()) != 0) != (parity == 1)) {
        continue;
      }
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw InvalidInput("P spec '" + spec_in + "' selects no P");
  return out;
}

}  // namespace lucas
