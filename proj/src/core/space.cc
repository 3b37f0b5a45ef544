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

#include "statleak/core/space.h"

#include <algorithm>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

ParameterSpace ParameterSpace::Full(std::vector<std::string> categories,
                                    int64_t tau) {
  ParameterSpace s;
  s.categories_ = std::move(categories);
  s.tau_ = tau;
  return s;
}

ParameterSpace ParameterSpace::Full(int d, int64_t tau) {
  std::vector<std::string> cats;
  for (int i = 0; i < d; ++i) cats.push_back(absl::StrCat("c", i));
  return Full(std::move(cats), tau);
}

absl::StatusOr<ParameterSpace> ParameterSpace::Explicit(
    std::vector<std::string> categories, int64_t tau,
    std::vector<CategoricalParam> members) {
  std::set<CategoricalParam> seen;
  for (const auto& m : members) {
    if (m.d() != static_cast<int>(categories.size()) || m.tau() != tau) {
      return absl::InvalidArgumentError(absl::StrCat(
          "member ", m.Label(), " does not match the space shape"));
    }
    if (!seen.insert(m).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate member ", m.Label()));
    }
  }
  ParameterSpace s;
  s.categories_ = std::move(categories);
  s.tau_ = tau;
  s.members_ = std::make_shared<const std::vector<CategoricalParam>>(
      std::move(members));
  return s;
}

BigInt ParameterSpace::Size() const {
  if (members_) return BigInt(static_cast<unsigned long>(members_->size()));
  return CompositionCount(tau_, d());
}

bool ParameterSpace::Contains(const CategoricalParam& theta) const {
  if (theta.d() != d() || theta.tau() != tau_) return false;
  if (!members_) return true;
  return std::find(members_->begin(), members_->end(), theta) !=
         members_->end();
}

absl::StatusOr<std::vector<CategoricalParam>> ParameterSpace::Members(
    uint64_t cap) const {
  if (members_) {
    if (members_->size() > cap) {
      return absl::ResourceExhaustedError("explicit space exceeds cap");
    }
    return *members_;
  }
  return EnumerateParams(d(), tau_, cap);
}

absl::StatusOr<BigInt> ParameterSpace::IndexOf(
    const CategoricalParam& theta) const {
  if (theta.d() != d() || theta.tau() != tau_) {
    return absl::NotFoundError(
        absl::StrCat(theta.Label(), " is not in the space"));
  }
  if (!members_) return RankParam(theta);
  auto it = std::find(members_->begin(), members_->end(), theta);
  if (it == members_->end()) {
    return absl::NotFoundError(
        absl::StrCat(theta.Label(), " is not in the space"));
  }
  return BigInt(static_cast<unsigned long>(it - members_->begin()));
}

absl::StatusOr<CategoricalParam> ParameterSpace::At(const BigInt& index) const {
  if (!members_) return UnrankParam(index, d(), tau_);
  if (index < 0 || index >= Size()) {
    return absl::OutOfRangeError("index out of range");
  }
  return (*members_)[index.get_ui()];
}

}  // namespace statleak
