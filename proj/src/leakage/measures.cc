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

#include "statleak/leakage/measures.h"

#include <algorithm>
#include <limits>

namespace statleak {

Rational MinEntropyRaw(const PolicyMatrix& policy) {
  Rational sum = 0;
  for (int j = 0; j < policy.num_outputs(); ++j) {
    Rational m = 0;
    for (int i = 0; i < policy.num_inputs(); ++i) {
      m = std::max(m, policy.at(i, j));
    }
    sum += m;
  }
  return sum;
}

double MinEntropyLeakage(const PolicyMatrix& policy, LogBase base) {
  return LogOf(MinEntropyRaw(policy), base);
}

Sandwich SandwichBounds(const PolicyMatrix& policy,
                        const SecretPartition& partition, LogBase base) {
  double mel = MinEntropyLeakage(policy, base);
  double biggest = LogOf(
      BigInt(static_cast<unsigned long>(partition.MaxClassSize())), base);
  double log_s =
      LogOf(BigInt(static_cast<unsigned long>(partition.s())), base);
  return {std::max(0.0, mel - biggest), std::min(mel, log_s)};
}

double LdpResult::mu(LogBase base) const {
  if (!max_ratio) return std::numeric_limits<double>::infinity();
  return LogOf(*max_ratio, base);
}

LdpResult LdpParameter(const PolicyMatrix& policy,
                       const SecretPartition& partition) {
  // Per output, the ratio is maximised by the largest numerator and the
  // smallest denominator, so per-class extremes suffice.
  LdpResult r;
  r.max_ratio = Rational(1);
  if (partition.s() < 2) return r;
  int s = partition.s();
  for (int j = 0; j < policy.num_outputs(); ++j) {
    std::vector<Rational> hi(s, Rational(-1)), lo(s, Rational(2));
    for (int i = 0; i < policy.num_inputs(); ++i) {
      int k = partition.class_of(i);
      hi[k] = std::max(hi[k], policy.at(i, j));
      lo[k] = std::min(lo[k], policy.at(i, j));
    }
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) {
        if (a == b || hi[a] == 0) continue;
        if (lo[b] == 0) {
          r.max_ratio.reset();
          return r;
        }
        Rational q = hi[a] / lo[b];
        if (q > *r.max_ratio) r.max_ratio = q;
      }
    }
  }
  return r;
}

nlohmann::json LdpToJson(const LdpResult& r, LogBase base) {
  if (r.infinite()) {
    return {{"mu", "inf"}, {"max_ratio", "inf"}, {"log_base",
                                                   LogBaseName(base)}};
  }
  return {{"mu", r.mu(base)},
          {"max_ratio", FormatRational(*r.max_ratio)},
          {"log_base", LogBaseName(base)}};
}

}  // namespace statleak
