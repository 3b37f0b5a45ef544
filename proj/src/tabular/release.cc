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


#include "statleak/tabular/release.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "statleak/core/rng.h"

namespace statleak {

namespace {

// Streams of the release seed.
constexpr uint64_t kSampleStream = 0;
constexpr uint64_t kShuffleStream = 1;

}  // namespace

absl::StatusOr<Dataset> MaterializeRows(const CategoricalParam& theta,
                                        const std::vector<Combo>& categories,
                                        const std::vector<std::string>& columns,
                                        uint64_t seed) {
  if (static_cast<size_t>(theta.d()) != categories.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("parameter has ", theta.d(), " categories, expected ",
                     categories.size()));
  }
  Dataset out;
  out.columns = columns;
  for (int i = 0; i < theta.d(); ++i) {
    for (int64_t k = 0; k < theta.count(i); ++k) {
      out.rows.push_back(categories[i]);
    }
  }
  Rng rng = Rng(seed).Split(kShuffleStream);
  rng.Shuffle(out.rows);
  return out;
}

absl::StatusOr<ReleaseResult> ReleaseDataset(const Dataset& ds,
                                             const SupportSets& sets,
                                             const Mechanism& mech,
                                             uint64_t seed) {
  std::vector<Combo> cats = sets.Categories();
  if (mech.output_space().categories() != sets.CategoryLabels()) {
    return absl::InvalidArgumentError(
        "mechanism output categories differ from the dataset's category list");
  }
  absl::StatusOr<CategoricalParam> theta = ToParam(ds, sets);
  if (!theta.ok()) return theta.status();
  if (mech.output_space().tau() != theta->tau()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "release needs tau = n = ", theta->tau(), ", mechanism has tau = ",
        mech.output_space().tau()));
  }
  Rng rng = Rng(seed).Split(kSampleStream);
  absl::StatusOr<CategoricalParam> out = mech.Sample(*theta, rng);
  if (!out.ok()) return out.status();
  absl::StatusOr<Dataset> rows = MaterializeRows(*out, cats, ds.columns, seed);
  if (!rows.ok()) return rows.status();
  return ReleaseResult{*std::move(theta), *std::move(out), *std::move(rows)};
}

}  // namespace statleak
