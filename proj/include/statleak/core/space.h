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

#ifndef STATLEAK_CORE_SPACE_H_
#define STATLEAK_CORE_SPACE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/param.h"

namespace statleak {

// A finite set of parameters over a fixed category list. Either implicit
// (every composition of tau) or an explicit member list.
class ParameterSpace {
 public:
  static ParameterSpace Full(std::vector<std::string> categories, int64_t tau);
  // Categories named "c0", "c1", ...
  static ParameterSpace Full(int d, int64_t tau);
  static absl::StatusOr<ParameterSpace> Explicit(
      std::vector<std::string> categories, int64_t tau,
      std::vector<CategoricalParam> members);

  bool implicit() const { return members_ == nullptr; }
  const std::vector<std::string>& categories() const { return categories_; }
  int d() const { return static_cast<int>(categories_.size()); }
  int64_t tau() const { return tau_; }
  BigInt Size() const;

  bool Contains(const CategoricalParam& theta) const;
  absl::StatusOr<std::vector<CategoricalParam>> Members(
      uint64_t cap = kDefaultEnumCap) const;
  absl::StatusOr<BigInt> IndexOf(const CategoricalParam& theta) const;
  absl::StatusOr<CategoricalParam> At(const BigInt& index) const;

 private:
  ParameterSpace() = default;

  std::vector<std::string> categories_;
  int64_t tau_ = 0;
  std::shared_ptr<const std::vector<CategoricalParam>> members_;
};

}  // namespace statleak

#endif  // STATLEAK_CORE_SPACE_H_
