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


#ifndef STATLEAK_TABULAR_RELEASE_H_
#define STATLEAK_TABULAR_RELEASE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/mechanism.h"
#include "statleak/tabular/dataset.h"
#include "statleak/tabular/support_sets.h"

namespace statleak {

// counts[i] rows of categories[i], emitted in category order and then
// shuffled by `seed`.
absl::StatusOr<Dataset> MaterializeRows(const CategoricalParam& theta,
                                        const std::vector<Combo>& categories,
                                        const std::vector<std::string>& columns,
                                        uint64_t seed);

struct ReleaseResult {
  CategoricalParam theta;
  CategoricalParam theta_prime;
  Dataset released;
};

// Samples theta' = mech(theta) once at tau = n and writes n rows. The
// mechanism's output space must use the category list of `sets`.
absl::StatusOr<ReleaseResult> ReleaseDataset(const Dataset& ds,
                                             const SupportSets& sets,
                                             const Mechanism& mech,
                                             uint64_t seed);

}  // namespace statleak

#endif  // STATLEAK_TABULAR_RELEASE_H_
