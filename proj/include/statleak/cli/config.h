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


#ifndef STATLEAK_CLI_CONFIG_H_
#define STATLEAK_CLI_CONFIG_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "statleak/core/mechanism.h"
#include "statleak/core/policy.h"
#include "statleak/core/space.h"
#include "statleak/mechanisms/support.h"
#include "statleak/tabular/secret_spec.h"

namespace statleak {

// A parameter space plus the combo behind each category, so that secret
// predicates can be resolved. Spaces without combos get a single column
// named "category" holding the category name.
struct SpaceSpec {
  ParameterSpace space = ParameterSpace::Full(1, 0);
  std::vector<std::string> columns;
  std::vector<Combo> combos;
};

// {"categories": [...] | "d": n, "tau": t, "members": [...]?,
//  "columns": [...]?, "combos": [[...]]?}
absl::StatusOr<SpaceSpec> SpaceFromJson(const nlohmann::json& j);

// Secret config. Besides the tabular kinds, accepts {"kind": "fraction",
// "category": index-or-name}, {"kind": "identity"} and {"kind": "constant"}.
absl::StatusOr<BoundSecret> SecretFromJson(const nlohmann::json& j,
                                           const SpaceSpec& space);

struct BuildContext {
  const SpaceSpec* space = nullptr;
  const BoundSecret* secret = nullptr;  // Needed by qm and maxl.
  OutputSupport support;
  uint64_t seed = 0;
  uint64_t cap = kDefaultEnumCap;
};

// rr, qm, maxl, identity or constant.
absl::StatusOr<std::unique_ptr<Mechanism>> MechanismFromJson(
    const nlohmann::json& j, const BuildContext& ctx);

// Any mechanism config, including compose and postprocess, as an explicit
// kernel over `inputs`.
absl::StatusOr<PolicyMatrix> PolicyFromConfig(
    const nlohmann::json& j, const BuildContext& ctx,
    const std::vector<CategoricalParam>& inputs);

// 64-bit FNV-1a.
uint64_t Fnv1a(absl::string_view data,
               uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace statleak

#endif  // STATLEAK_CLI_CONFIG_H_
