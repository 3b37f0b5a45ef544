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

#ifndef STATLEAK_TRADEOFF_CLOSED_FORM_H_
#define STATLEAK_TRADEOFF_CLOSED_FORM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "statleak/core/rational.h"

namespace statleak {

// Sizes of the tabular setting. d_hat0 estimated categories are truly
// feasible, d_hat1 are not, d_star are truly feasible in total.
struct TabularScale {
  int64_t tau = 1;
  int64_t d_hat0 = 1;
  int64_t d_hat1 = 0;
  int64_t d_star = 1;
  int64_t s = 2;

  int64_t d_hat() const { return d_hat0 + d_hat1; }
  int64_t missed() const { return d_star - d_hat0; }
  absl::Status Validate() const;
  nlohmann::json ToJson() const;
  static absl::StatusOr<TabularScale> FromJson(const nlohmann::json& j);
  // Matched support with the fraction secret: d categories, s = tau + 1.
  static TabularScale Matched(int64_t tau, int64_t d);
};

// r = (e^eps - 1) / C(tau + d - 1, d - 1).
Rational RrR(int64_t tau, int64_t d, const Rational& exp_epsilon);

// (1 + s r) / (1 + r) with d = d_hat0.
Rational RrPrivacyRaw(const TabularScale& scale, const Rational& exp_epsilon);
double RrPrivacyClosed(const TabularScale& scale, const Rational& exp_epsilon,
                       LogBase base = LogBase::kBase2);
// (d_hat0 - 1) / (d_hat0 (1 + r)).
Rational RrDistortionAtR(const TabularScale& scale, const Rational& r);
Rational RrDistortionClosed(const TabularScale& scale,
                            const Rational& exp_epsilon);

// ceil(s / I).
BigInt QmPrivacyRaw(int64_t s, int64_t interval);
double QmPrivacyClosed(int64_t s, int64_t interval,
                       LogBase base = LogBase::kBase2);
// 1/2 + (d_hat0 floor(I/2) - tau) / (2 tau (d_hat0 - 1)); needs d_hat0 >= 2.
absl::StatusOr<Rational> QmDistortionClosed(const TabularScale& scale,
                                            int64_t interval);

// Solves (1 + s r) / (1 + r) = level for r. Needs 1 <= level < s.
absl::StatusOr<Rational> RFromPrivacyRaw(int64_t s, const Rational& level);

struct ComparisonRow {
  int64_t interval = 0;
  BigInt level;  // ceil(s / I), the shared raw privacy.
  Rational r;
  Rational rr_distortion;
  Rational qm_distortion;
  // Empty when QM distortion is zero.
  std::optional<Rational> ratio;
  // Smallest I reaching this level, i.e. QM's best distortion there.
  bool frontier = false;
};

// Every I with log ceil(s/I) <= budget, RR calibrated to the same privacy.
// A budget of log s or more is rejected as trivial.
absl::StatusOr<std::vector<ComparisonRow>> MechanismComparison(
    const TabularScale& scale, double budget, LogBase base = LogBase::kBase2);

}  // namespace statleak

#endif  // STATLEAK_TRADEOFF_CLOSED_FORM_H_
