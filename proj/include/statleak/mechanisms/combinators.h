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

#ifndef STATLEAK_MECHANISMS_COMBINATORS_H_
#define STATLEAK_MECHANISMS_COMBINATORS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/policy.h"

namespace statleak {

// Joint release of both outputs; labels are "a|b" and
// P(a, b | x) = P1(a | x) P2(b | x).
absl::StatusOr<PolicyMatrix> Compose(const PolicyMatrix& first,
                                     const PolicyMatrix& second);

// Adaptive variant: the second stage is chosen by the first output, so
// P(a, b | x) = P1(a | x) P2_a(b | x). All stages share inputs and outputs.
absl::StatusOr<PolicyMatrix> ComposeAdaptive(
    const PolicyMatrix& first, const std::vector<PolicyMatrix>& stages);

// Left fold of Compose over a non-empty list.
absl::StatusOr<PolicyMatrix> ComposeAll(const std::vector<PolicyMatrix>& mechs);

// P(z | x) = sum_y K(z | y) P(y | x). The kernel's inputs must be the
// policy's outputs, in the same order.
absl::StatusOr<PolicyMatrix> Postprocess(const PolicyMatrix& policy,
                                         const PolicyMatrix& kernel);

}  // namespace statleak

#endif  // STATLEAK_MECHANISMS_COMBINATORS_H_
