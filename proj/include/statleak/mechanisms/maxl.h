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

#ifndef STATLEAK_MECHANISMS_MAXL_H_
#define STATLEAK_MECHANISMS_MAXL_H_

#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/mechanism.h"

namespace statleak {

using CostFn = std::function<Rational(const CategoricalParam&,
                                      const CategoricalParam&)>;

struct MaxLResult {
  // Candidate indices in the order they were added.
  std::vector<int> selected;
  // Candidate index each input maps to.
  std::vector<int> assignment;
  // max over inputs of min over selected of cost.
  Rational worst_cost;
};

// Greedy selection under the worst-case cost. Each round adds the candidate
// whose per-input cost profile, sorted in descending order, is smallest
// lexicographically; it stops when no candidate makes that profile strictly
// smaller or every candidate is in. Ties go to the earlier candidate. Inputs
// map to their cheapest selected candidate, again earliest on ties.
absl::StatusOr<MaxLResult> MaxLGreedy(
    const std::vector<CategoricalParam>& inputs,
    const std::vector<CategoricalParam>& candidates,
    const CostFn& cost = nullptr);

// The greedy result as a deterministic mechanism whose output space is the
// selected candidates.
absl::StatusOr<MappedMechanism> BuildMaxL(
    const std::vector<std::string>& categories,
    const std::vector<CategoricalParam>& inputs,
    const std::vector<CategoricalParam>& candidates,
    const CostFn& cost = nullptr);

// One parameter per bin of I consecutive values of the fraction secret of
// `category`, drawn uniformly among parameters whose secret is in the bin.
std::vector<CategoricalParam> BinCandidates(int d, int64_t tau, int category,
                                            int64_t interval, Rng& rng);

}  // namespace statleak

#endif  // STATLEAK_MECHANISMS_MAXL_H_
