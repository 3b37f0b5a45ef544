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

#ifndef STATLEAK_MECHANISMS_SUPPORT_H_
#define STATLEAK_MECHANISMS_SUPPORT_H_

#include <functional>
#include <vector>

#include "statleak/core/param.h"
#include "statleak/core/rng.h"

namespace statleak {

// Output categories a mechanism may put mass on, given the input. An empty
// function means every category.
using OutputSupport = std::function<std::vector<bool>(const CategoricalParam&)>;

// The holder's estimated set plus whatever the input itself occupies.
OutputSupport EstimatedSupport(std::vector<bool> estimated);

std::vector<bool> AllowedFor(const OutputSupport& support,
                             const CategoricalParam& in);
bool WithinSupport(const CategoricalParam& out,
                   const std::vector<bool>& allowed);

// Uniform composition of tau over the given category indices of a d-vector,
// zero elsewhere. Unranks for small spaces, stars and bars otherwise.
std::vector<int64_t> UniformOver(int64_t tau, int d,
                                 const std::vector<int>& categories, Rng& rng);

}  // namespace statleak

#endif  // STATLEAK_MECHANISMS_SUPPORT_H_
