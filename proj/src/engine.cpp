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

#include <utility>

#include "lucas/sequence.hpp"

namespace lucas {
namespace {

class ExactEngine final : public SequenceEngine {
 public:
  IndexedPair pair_at(const SequenceParams& params, Index n) const override {
    return lucas::pair_at(params, n);
  }
  Integer u_mod(const SequenceParams& params, Index n,
                const Integer& modulus) const override {
    return lucas::u_mod(params, n, modulus);
  }
  Integer v_mod(const SequenceParams& params, Index n,
                const Integer& modulus) const override {
    return lucas::v_mod(params, n, modulus);
  }
  std::vector<IndexedPair> range(const SequenceParams& params, Index n_lo,
                                 Index n_hi) const override {
    std::vector<IndexedPair> out;
    const SequenceRange r = seq_range(params, n_lo, n_hi);
    out.reserve(static_cast<std::size_t>(r.size()));
    for (const IndexedPair& pair : r) out.push_back(pair);
    return out;
  }
};

}  // namespace

const SequenceEngine& exact_engine() {
  static const ExactEngine engine;
  return engine;
}

PerturbedEngine::PerturbedEngine(const SequenceEngine& base,
                                 SequenceParams target, Index n,
                                 Component component, Integer delta)
    : base_(base),
      target_(std::move(target)),
      index_(n),
      component_(component),
      delta_(std::move(delta)) {}

IndexedPair PerturbedEngine::pair_at(const SequenceParams& params,
                                     Index n) const {
  IndexedPair pair = base_.pair_at(params, n);
  if (hits(params, n)) {
    (component_ == Component::U ? pair.u : pair.v) += delta_;
  }
  return pair;
}

Integer PerturbedEngine::u_mod(const SequenceParams& params, Index n,
                               const Integer& modulus) const {
  Integer r = base_.u_mod(params, n, modulus);
  if (hits(params, n) && component_ == Component::U) {
    r += delta_;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  }
  return r;
}

Integer PerturbedEngine::v_mod(const SequenceParams& params, Index n,
                               const Integer& modulus) const {
  Integer r = base_.v_mod(params, n, modulus);
  if (hits(params, n) && component_ == Component::V) {
    r += delta_;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  }
  return r;
}

std::vector<IndexedPair> PerturbedEngine::range(const SequenceParams& params,
                                                Index n_lo, Index n_hi) const {
  std::vector<IndexedPair> out = base_.range(params, n_lo, n_hi);
  if (params == target_ && n_lo <= index_ && index_ <= n_hi) {
    IndexedPair& pair = out[static_cast<std::size_t>(index_ - n_lo)];
    (component_ == Component::U ? pair.u : pair.v) += delta_;
  }
  return out;
}

}  // namespace lucas
