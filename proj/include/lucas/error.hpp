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

#ifndef LUCAS_ERROR_HPP_
#define LUCAS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lucas {

/// A precondition on an argument was violated (bad P/Q, modulus < 2, zero
/// index where a nonzero one is required, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A query asks a theorem about parameters its hypotheses do not cover.
/// The message names the violated hypothesis.
class OutOfScope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lucas

#endif  // LUCAS_ERROR_HPP_
