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


#ifndef STATLEAK_TABULAR_SUPPORT_SETS_H_
#define STATLEAK_TABULAR_SUPPORT_SETS_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "statleak/core/param.h"
#include "statleak/tabular/dataset.h"
#include "statleak/tradeoff/closed_form.h"

namespace statleak {

// One cell value per selected column.
using Combo = std::vector<std::string>;

// Stable label for a combo: its JSON array text.
std::string ComboKey(const Combo& c);

// Parses a JSON list of combo tuples. Scalars are accepted as 1-tuples.
absl::StatusOr<std::vector<Combo>> CombosFromJson(const nlohmann::json& j,
                                                  size_t arity);

struct SupportSets {
  std::vector<std::string> columns;
  std::vector<Combo> gamma;           // Sorted, distinct.
  std::vector<int64_t> gamma_counts;  // Aligned with gamma.
  std::optional<std::vector<Combo>> gamma_star;
  std::optional<std::vector<Combo>> gamma_hat_star;

  int64_t d() const { return static_cast<int64_t>(gamma.size()); }
  // The estimate defaults to gamma; the truth defaults to the estimate
  // together with gamma.
  std::vector<Combo> EstimatedSet() const;
  std::vector<Combo> TrueSet() const;
  int64_t d_star() const;
  int64_t d_hat0() const;
  int64_t d_hat1() const;
  // Sorted union of gamma and the estimate; the parameter's category list.
  std::vector<Combo> Categories() const;
  std::vector<std::string> CategoryLabels() const;
  TabularScale Scale(int64_t tau, int64_t s) const;
};

SupportSets ExtractSupport(const Dataset& ds);

// Attaches the optional sets. Errors when gamma is not inside gamma_star or a
// tuple has the wrong arity.
absl::Status AttachSupports(SupportSets& sets,
                            std::optional<std::vector<Combo>> gamma_star,
                            std::optional<std::vector<Combo>> gamma_hat_star);

// counts[i] = rows with category i, rescaled to tau (defaults to n). The
// rescale must be exact.
absl::StatusOr<CategoricalParam> ToParam(const Dataset& ds,
                                         const SupportSets& sets,
                                         std::optional<int64_t> tau = {});

}  // namespace statleak

#endif  // STATLEAK_TABULAR_SUPPORT_SETS_H_
