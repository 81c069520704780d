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

// Profiles, identity sweeps and the full verification run.

#ifndef LUCAS_HARNESS_HPP_
#define LUCAS_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lucas/classifier.hpp"

namespace lucas {

enum class Profile { Quick, Full };

std::string profile_name(Profile profile);
std::optional<Profile> parse_profile(const std::string& name);

struct ProfileBounds {
  Index p_max;
  Index n_max;
  Index m_max;
};

/// quick: P <= 25, n <= 120, m <= 60.  full: P <= 99, n <= 400, m <= 200.
ProfileBounds profile_bounds(Profile profile);

/// The box a profile uses for one search theorem.
Box profile_box(const std::string& id, Profile profile);

struct SweepConfig {
  std::vector<Integer> p_values;  // Q = 1 parameters; parity filtered per check
  Index index_max = 12;           // index bound for exact checks
  Index shift_max = 12;           // |m|, |n|, |r| bound for shift checks
  Index far_n = 1'000'000;        // n for the modular shift checks
  Index far_m_max = 12;
  Index far_r_max = 3;
  Index pow2_k_max = 62;
  std::uint64_t residue_m_max = 2001;
  Index lucas_pow2_k_max = 5;
  Index jacobi_r_max = 10;
  Integer pell_bound = 10'000;
  Integer form_bound = 10'000;
  Integer pell3_bound = 10'000;
  Integer quartic_bound = 10'000;
  Integer pythagorean_bound = 10'000;
  std::size_t keep_failures = 20;
};

SweepConfig sweep_config(Profile profile);

/// Each sweep returns one report; verdict is counterexample iff some check
/// failed or threw.
TheoremReport sweep_shift(const SweepConfig& cfg, const SequenceEngine& eng);
TheoremReport sweep_products(const SweepConfig& cfg, const SequenceEngine& eng);
TheoremReport sweep_divisibility(const SweepConfig& cfg,
                                 const SequenceEngine& eng);
TheoremReport sweep_residues(const SweepConfig& cfg, const SequenceEngine& eng);
TheoremReport sweep_jacobi(const SweepConfig& cfg, const SequenceEngine& eng);
TheoremReport sweep_diophantine(const SweepConfig& cfg,
                                const SequenceEngine& eng);

/// All six sweeps, in report order.
std::vector<TheoremReport> run_sweeps(const SweepConfig& cfg,
                                      const SequenceEngine& eng);

/// The search theorems over the profile boxes followed by the sweeps.
std::vector<TheoremReport> verify_all(Profile profile,
                                      const SequenceEngine& eng = exact_engine(),
                                      unsigned jobs = 1);

}  // namespace lucas

#endif  // LUCAS_HARNESS_HPP_
