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

#ifndef STATLEAK_LEAKAGE_SML_H_
#define STATLEAK_LEAKAGE_SML_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "statleak/core/policy.h"
#include "statleak/core/secret.h"

namespace statleak {

// One representative input row per secret class, indexed by class.
struct PriorAssignment {
  std::vector<int> rows;
};

struct LeakageReport {
  // Sum over outputs of the max over secrets of P(out | theta_g).
  Rational raw_sum;
  double sml = 0;
  LogBase base = LogBase::kBase2;
  PriorAssignment witness;
  std::string method;
};

struct BruteForceOptions {
  uint64_t cap = 1'000'000;
  int jobs = 1;
  LogBase base = LogBase::kBase2;
};

// Exact maximum over every prior assignment. Ties go to the assignment that
// comes first in odometer order (last class varies fastest), whatever the
// worker count.
absl::StatusOr<LeakageReport> SmlBruteForce(const PolicyMatrix& policy,
                                            const SecretPartition& partition,
                                            const BruteForceOptions& opts = {});

// Deterministic policies only: the negated cost of the min-cost flow.
absl::StatusOr<LeakageReport> SmlDeterministic(
    const PolicyMatrix& policy, const SecretPartition& partition,
    LogBase base = LogBase::kBase2);

// Raw sum of one assignment, straight from the definition.
Rational AssignmentRawSum(const PolicyMatrix& policy,
                          const PriorAssignment& assignment);

nlohmann::json ReportToJson(const LeakageReport& report,
                            const PolicyMatrix& policy,
                            const SecretPartition& partition,
                            bool include_witness = true);

}  // namespace statleak

#endif  // STATLEAK_LEAKAGE_SML_H_
