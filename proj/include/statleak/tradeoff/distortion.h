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

#ifndef STATLEAK_TRADEOFF_DISTORTION_H_
#define STATLEAK_TRADEOFF_DISTORTION_H_

#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/mechanism.h"

namespace statleak {

struct DistortionResult {
  Rational value;
  int argmax = -1;  // Input row attaining the max, lowest on ties.
};

// max over inputs of the expected TV distance between input and output.
// Parameters are aligned to the policy's rows and columns.
absl::StatusOr<DistortionResult> DistortionExact(
    const PolicyMatrix& policy, const std::vector<CategoricalParam>& inputs,
    const std::vector<CategoricalParam>& outputs);

struct McEstimate {
  double estimate = 0;
  double stderr_of_mean = 0;
  int argmax = -1;
};

// Sample-mean TV per candidate input, maximised over the candidates.
absl::StatusOr<McEstimate> DistortionMc(
    const Mechanism& mech, const std::vector<CategoricalParam>& candidates,
    int samples, Rng& rng);

}  // namespace statleak

#endif  // STATLEAK_TRADEOFF_DISTORTION_H_
