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

#ifndef STATLEAK_CORE_SECRET_H_
#define STATLEAK_CORE_SECRET_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/param.h"

namespace statleak {

struct SecretValue {
  std::string id;
  // Present when the secret space is totally ordered.
  std::optional<Rational> order_key;

  friend bool operator==(const SecretValue& a, const SecretValue& b) {
    return a.id == b.id;
  }
};

using SecretFn =
    std::function<absl::StatusOr<SecretValue>(const CategoricalParam&)>;

// Mass of one category; ordered, with s = tau + 1 values over a full space.
SecretFn FractionSecret(int category);
SecretFn ConstantSecret();
// Every parameter is its own secret.
SecretFn IdentitySecret();

// The classes Theta_g over a member list. Member indices refer to the list
// the partition was built from (and to policy rows built on the same list).
class SecretPartition {
 public:
  // class_of[i] is the class index of member i; secrets[k] names class k.
  static absl::StatusOr<SecretPartition> FromClassIds(
      std::vector<int> class_of, std::vector<SecretValue> secrets);
  // Class ids 0..s-1 named "g0".. and ordered by id.
  static absl::StatusOr<SecretPartition> FromClassIds(std::vector<int> class_of);

  int s() const { return static_cast<int>(secrets_.size()); }
  int num_members() const { return static_cast<int>(class_of_.size()); }
  bool ordered() const { return ordered_; }
  const std::vector<SecretValue>& secrets() const { return secrets_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int member) const { return class_of_[member]; }
  size_t MaxClassSize() const;
  // Product of class sizes, saturating at the cap + 1.
  uint64_t AssignmentCount(uint64_t cap) const;

 private:
  std::vector<SecretValue> secrets_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  bool ordered_ = false;
};

// Secrets are sorted by order key when every value has one, otherwise kept in
// first-appearance order. Declared secrets that no member attains are an
// error.
absl::StatusOr<SecretPartition> BuildPartition(
    const std::vector<CategoricalParam>& members, const SecretFn& fn,
    const std::vector<SecretValue>* declared = nullptr);

// The s = tau + 1 values of FractionSecret, ascending.
std::vector<SecretValue> FractionSecretValues(int64_t tau);

}  // namespace statleak

#endif  // STATLEAK_CORE_SECRET_H_
