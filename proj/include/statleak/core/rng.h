//
// Copyright 2026 The statleak Authors
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
//

#ifndef STATLEAK_CORE_RNG_H_
#define STATLEAK_CORE_RNG_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "statleak/core/rational.h"

namespace statleak {

// Splittable SplitMix64 stream. Streams derived with Split() depend only on
// (seed, stream ids), never on how much the parent has been consumed, so
// parallel and sequential runs draw identical values.
class Rng {
 public:
  explicit Rng(uint64_t seed) : key_(Mix(seed)), counter_(0) {}

  Rng Split(uint64_t stream) const;
  uint64_t Next();
  // Unbiased in [0, n). n > 0.
  uint64_t Uniform(uint64_t n);
  // Unbiased in [0, n). n > 0.
  BigInt UniformBig(const BigInt& n);
  // True with probability p, exactly.
  bool Bernoulli(const Rational& p);
  double UniformDouble();

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Uniform(i)]);
    }
  }

  static uint64_t Mix(uint64_t z);

 private:
  Rng(uint64_t key, uint64_t counter, int) : key_(key), counter_(counter) {}

  uint64_t key_;
  uint64_t counter_;
};

// Index drawn with the given exact probabilities (which must sum to 1).
int SampleIndex(const std::vector<Rational>& probs, Rng& rng);

// Uniform composition of tau into d parts via stars and bars; no enumeration,
// so it works for very large spaces.
std::vector<int64_t> UniformComposition(int64_t tau, int d, Rng& rng);

}  // namespace statleak

#endif  // STATLEAK_CORE_RNG_H_
