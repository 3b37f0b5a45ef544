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

#include "statleak/tradeoff/distortion.h"

#include <cmath>

#include "absl/status/status.h"

namespace statleak {

absl::StatusOr<DistortionResult> DistortionExact(
    const PolicyMatrix& policy, const std::vector<CategoricalParam>& inputs,
    const std::vector<CategoricalParam>& outputs) {
  if (static_cast<int>(inputs.size()) != policy.num_inputs() ||
      static_cast<int>(outputs.size()) != policy.num_outputs()) {
    return absl::InvalidArgumentError(
        "parameter lists do not match the policy shape");
  }
  DistortionResult best;
  best.value = 0;
  for (int i = 0; i < policy.num_inputs(); ++i) {
    Rational e = 0;
    for (int j = 0; j < policy.num_outputs(); ++j) {
      if (policy.at(i, j) == 0) continue;
      e += policy.at(i, j) * TvDistance(inputs[i], outputs[j]);
    }
    if (best.argmax < 0 || e > best.value) {
      best.value = e;
      best.argmax = i;
    }
  }
  return best;
}

absl::StatusOr<McEstimate> DistortionMc(
    const Mechanism& mech, const std::vector<CategoricalParam>& candidates,
    int samples, Rng& rng) {
  if (candidates.empty()) {
    return absl::InvalidArgumentError("no candidate inputs");
  }
  if (samples < 2) return absl::InvalidArgumentError("need >= 2 samples");
  McEstimate best;
  for (size_t c = 0; c < candidates.size(); ++c) {
    Rng stream = rng.Split(c);
    double sum = 0, sq = 0;
    for (int k = 0; k < samples; ++k) {
      absl::StatusOr<CategoricalParam> out =
          mech.Sample(candidates[c], stream);
      if (!out.ok()) return out.status();
      double tv = ToDouble(TvDistance(candidates[c], *out));
      sum += tv;
      sq += tv * tv;
    }
    double mean = sum / samples;
    double var = std::max(0.0, (sq - samples * mean * mean) / (samples - 1));
    if (best.argmax < 0 || mean > best.estimate) {
      best.estimate = mean;
      best.stderr_of_mean = std::sqrt(var / samples);
      best.argmax = static_cast<int>(c);
    }
  }
  return best;
}

}  // namespace statleak
