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

#ifndef STATLEAK_TRADEOFF_MISMATCH_H_
#define STATLEAK_TRADEOFF_MISMATCH_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "statleak/core/policy.h"
#include "statleak/core/secret.h"
#include "statleak/core/space.h"
#include "statleak/mechanisms/support.h"
#include "statleak/tradeoff/closed_form.h"

namespace statleak {

// e^eps cap under which RR is log 3-robust: 1 + C(tau + d_hat - 1,
// d_hat - 1) / s.
Rational RrRobustExpEpsilonCap(int64_t tau, int64_t d_hat, int64_t s);
// Natural log of the above.
double RrRobustEpsilonCap(int64_t tau, int64_t d_hat, int64_t s);

// A bound on the raw privacy sum. Exact when every exponent is an integer.
struct BoundValue {
  std::optional<Rational> exact;
  double approx = 0;

  double Log(LogBase base) const;
};

struct MismatchBounds {
  BoundValue privacy_lo;
  BoundValue privacy_hi;
  int lo_branch = 0;  // 1, 2 or 3.
  std::string lo_branch_condition;
  Rational distortion_lo;
  Rational distortion_hi;

  nlohmann::json ToJson(LogBase base) const;
};

// Branches compare d_star - d_hat0 against log2 s and s.
absl::StatusOr<MismatchBounds> RrMismatchBounds(const TabularScale& scale,
                                                const Rational& exp_epsilon);
// Branches compare d_star - d_hat0 against log2 I and I. Needs
// d_hat0 + d_hat1 >= 2.
absl::StatusOr<MismatchBounds> QmMismatchBounds(const TabularScale& scale,
                                                int64_t interval);

// Missed-category count below which QM privacy decays roughly linearly.
double QmDecayThreshold(int64_t s, int64_t interval, int64_t tau,
                        int64_t d_hat0);

// The mismatched release problem at desk scale. Categories are ordered as
// estimated-and-feasible (the secret category is index 0), then feasible but
// missed, then spurious. Inputs are every parameter over the feasible
// categories; outputs may use the estimated set plus the input's own support.
struct MismatchInstance {
  ParameterSpace outputs = ParameterSpace::Full(1, 0);
  std::vector<CategoricalParam> inputs;
  SecretPartition partition;
  OutputSupport support;
};

absl::StatusOr<MismatchInstance> BuildMismatchInstance(
    const TabularScale& scale, uint64_t cap = kDefaultEnumCap);

absl::StatusOr<PolicyMatrix> MismatchedRrPolicy(const MismatchInstance& inst,
                                                const Rational& exp_epsilon,
                                                uint64_t cap = kDefaultEnumCap);
absl::StatusOr<PolicyMatrix> MismatchedQmPolicy(const MismatchInstance& inst,
                                                int64_t interval,
                                                uint64_t cap = kDefaultEnumCap);

}  // namespace statleak

#endif  // STATLEAK_TRADEOFF_MISMATCH_H_
