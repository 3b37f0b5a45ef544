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

#include "statleak/core/rng.h"

#include <algorithm>
#include <unordered_set>

namespace statleak {

uint64_t Rng::Mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::Split(uint64_t stream) const {
  return Rng(Mix(key_ ^ Mix(stream ^ 0x5851f42d4c957f2dULL)), 0, 0);
}

uint64_t Rng::Next() { return Mix(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

uint64_t Rng::Uniform(uint64_t n) {
  uint64_t threshold = (0 - n) % n;
  while (true) {
    uint64_t r = Next();
    if (r >= threshold) return r % n;
  }
}

BigInt Rng::UniformBig(const BigInt& n) {
  if (n.fits_ulong_p()) {
    return BigInt(static_cast<unsigned long>(Uniform(n.get_ui())));
  }
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  while (true) {
    BigInt r = 0;
    size_t have = 0;
    while (have < bits) {
      r <<= 64;
      r += BigInt(static_cast<unsigned long>(Next()));
      have += 64;
    }
    r >>= (have - bits);
    if (r < n) return r;
  }
}

bool Rng::Bernoulli(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return UniformBig(p.get_den()) < p.get_num();
}

double Rng::UniformDouble() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

int SampleIndex(const std::vector<Rational>& probs, Rng& rng) {
  BigInt den = 1;
  for (const auto& p : probs) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.get_den_mpz_t());
  }
  BigInt u = rng.UniformBig(den);
  BigInt acc = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i].get_num() * (den / probs[i].get_den());
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

std::vector<int64_t> UniformComposition(int64_t tau, int d, Rng& rng) {
  std::vector<int64_t> out(d, 0);
  if (d == 1) {
    out[0] = tau;
    return out;
  }
  // Choose d-1 bar positions among tau+d-1 slots (Floyd's algorithm).
  uint64_t n = static_cast<uint64_t>(tau + d - 1);
  uint64_t k = static_cast<uint64_t>(d - 1);
  std::unordered_set<uint64_t> chosen;
  chosen.reserve(k * 2);
  for (uint64_t j = n - k; j < n; ++j) {
    uint64_t t = rng.Uniform(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<uint64_t> bars(chosen.begin(), chosen.end());
  std::sort(bars.begin(), bars.end());
  uint64_t prev = 0;
  for (uint64_t i = 0; i < k; ++i) {
    out[i] = static_cast<int64_t>(bars[i] - prev);
    prev = bars[i] + 1;
  }
  out[d - 1] = static_cast<int64_t>(n - prev);
  return out;
}

}  // namespace statleak
