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

#ifndef STATLEAK_CORE_PARAM_H_
#define STATLEAK_CORE_PARAM_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "statleak/core/rational.h"

namespace statleak {

inline constexpr uint64_t kDefaultEnumCap = 1'000'000;

// A categorical distribution on the 1/tau grid: mass of category i is
// counts[i] / tau.
class CategoricalParam {
 public:
  CategoricalParam() = default;
  // tau is the sum of the counts.
  explicit CategoricalParam(std::vector<int64_t> counts);

  static absl::StatusOr<CategoricalParam> Create(std::vector<int64_t> counts,
                                                 int64_t tau);
  static absl::StatusOr<CategoricalParam> FromJson(const nlohmann::json& j);

  const std::vector<int64_t>& counts() const { return counts_; }
  int64_t count(int i) const { return counts_[i]; }
  int64_t tau() const { return tau_; }
  int d() const { return static_cast<int>(counts_.size()); }
  Rational Mass(int i) const;

  // "(2,1,1)/4"
  std::string Label() const;
  nlohmann::json ToJson() const;

  friend bool operator==(const CategoricalParam&,
                         const CategoricalParam&) = default;
  friend auto operator<=>(const CategoricalParam&,
                          const CategoricalParam&) = default;

 private:
  std::vector<int64_t> counts_;
  int64_t tau_ = 0;
};

// Half the L1 distance. Shorter vectors are padded with zeros, and differing
// tau values are fine since the arithmetic is exact.
Rational TvDistance(const CategoricalParam& p, const CategoricalParam& q);

// Same, but aligns the two vectors by category name over the union of the
// two category lists.
absl::StatusOr<Rational> TvDistance(const CategoricalParam& p,
                                    const std::vector<std::string>& p_cats,
                                    const CategoricalParam& q,
                                    const std::vector<std::string>& q_cats);

// All compositions of tau into d parts in lexicographic order, so the first
// element is (0,...,0,tau).
absl::StatusOr<std::vector<CategoricalParam>> EnumerateParams(
    int d, int64_t tau, uint64_t cap = kDefaultEnumCap);

absl::StatusOr<BigInt> RankParam(const CategoricalParam& theta);
absl::StatusOr<CategoricalParam> UnrankParam(const BigInt& index, int d,
                                             int64_t tau);

}  // namespace statleak

#endif  // STATLEAK_CORE_PARAM_H_
