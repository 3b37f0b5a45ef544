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

#ifndef STATLEAK_LEAKAGE_MEASURES_H_
#define STATLEAK_LEAKAGE_MEASURES_H_

#include <optional>

#include "json.hpp"
#include "statleak/core/policy.h"
#include "statleak/core/secret.h"

namespace statleak {

// Sum over outputs of the column maximum.
Rational MinEntropyRaw(const PolicyMatrix& policy);
double MinEntropyLeakage(const PolicyMatrix& policy,
                         LogBase base = LogBase::kBase2);

struct Sandwich {
  double lower = 0;
  double upper = 0;
};

// max(0, MEL - log max|class|) and min(MEL, log s).
Sandwich SandwichBounds(const PolicyMatrix& policy,
                        const SecretPartition& partition,
                        LogBase base = LogBase::kBase2);

struct LdpResult {
  // Largest P(o|a)/P(o|b) over cross-secret pairs; empty means infinite.
  std::optional<Rational> max_ratio;

  bool infinite() const { return !max_ratio.has_value(); }
  // log of the ratio; +inf when infinite.
  double mu(LogBase base = LogBase::kNatural) const;
};

LdpResult LdpParameter(const PolicyMatrix& policy,
                       const SecretPartition& partition);

nlohmann::json LdpToJson(const LdpResult& r, LogBase base);

}  // namespace statleak

#endif  // STATLEAK_LEAKAGE_MEASURES_H_
