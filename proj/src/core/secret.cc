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

#include "statleak/core/secret.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

SecretFn FractionSecret(int category) {
  return [category](const CategoricalParam& theta)
             -> absl::StatusOr<SecretValue> {
    if (category < 0 || category >= theta.d()) {
      return absl::InvalidArgumentError(
          absl::StrCat("category ", category, " outside ", theta.Label()));
    }
    Rational g = theta.Mass(category);
    return SecretValue{g.get_str(), g};
  };
}

SecretFn ConstantSecret() {
  return [](const CategoricalParam&) -> absl::StatusOr<SecretValue> {
    return SecretValue{"*", Rational(0)};
  };
}

SecretFn IdentitySecret() {
  return [](const CategoricalParam& theta) -> absl::StatusOr<SecretValue> {
    return SecretValue{theta.Label(), std::nullopt};
  };
}

std::vector<SecretValue> FractionSecretValues(int64_t tau) {
  std::vector<SecretValue> out;
  for (int64_t l = 0; l <= tau; ++l) {
    Rational g = tau == 0 ? Rational(0) : MakeRational(l, tau);
    out.push_back({g.get_str(), g});
  }
  return out;
}

absl::StatusOr<SecretPartition> SecretPartition::FromClassIds(
    std::vector<int> class_of, std::vector<SecretValue> secrets) {
  SecretPartition p;
  p.classes_.resize(secrets.size());
  for (int i = 0; i < static_cast<int>(class_of.size()); ++i) {
    int k = class_of[i];
    if (k < 0 || k >= static_cast<int>(secrets.size())) {
      return absl::InvalidArgumentError("class id out of range");
    }
    p.classes_[k].push_back(i);
  }
  for (size_t k = 0; k < secrets.size(); ++k) {
    if (p.classes_[k].empty()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "secret '", secrets[k].id, "' has an empty class"));
    }
  }
  p.ordered_ = std::all_of(secrets.begin(), secrets.end(),
                           [](const SecretValue& v) {
                             return v.order_key.has_value();
                           });
  p.secrets_ = std::move(secrets);
  p.class_of_ = std::move(class_of);
  return p;
}

absl::StatusOr<SecretPartition> SecretPartition::FromClassIds(
    std::vector<int> class_of) {
  int s = 0;
  for (int k : class_of) s = std::max(s, k + 1);
  std::vector<SecretValue> secrets;
  for (int k = 0; k < s; ++k) {
    secrets.push_back({absl::StrCat("g", k), Rational(k)});
  }
  return FromClassIds(std::move(class_of), std::move(secrets));
}

size_t SecretPartition::MaxClassSize() const {
  size_t m = 0;
  for (const auto& c : classes_) m = std::max(m, c.size());
  return m;
}

uint64_t SecretPartition::AssignmentCount(uint64_t cap) const {
  uint64_t n = 1;
  for (const auto& c : classes_) {
    if (n > cap / c.size()) return cap + 1;
    n *= c.size();
  }
  return n;
}

absl::StatusOr<SecretPartition> BuildPartition(
    const std::vector<CategoricalParam>& members, const SecretFn& fn,
    const std::vector<SecretValue>* declared) {
  std::vector<SecretValue> values;
  std::vector<SecretValue> per_member;
  per_member.reserve(members.size());
  std::map<std::string, size_t> first_seen;
  for (const auto& m : members) {
    absl::StatusOr<SecretValue> v = fn(m);
    if (!v.ok()) return v.status();
    if (first_seen.emplace(v->id, values.size()).second) values.push_back(*v);
    per_member.push_back(*std::move(v));
  }
  if (declared != nullptr) {
    for (const auto& v : values) {
      if (std::find(declared->begin(), declared->end(), v) ==
          declared->end()) {
        return absl::InvalidArgumentError(
            absl::StrCat("secret '", v.id, "' is not declared"));
      }
    }
    values = *declared;
  }
  bool ordered = std::all_of(values.begin(), values.end(), [](const auto& v) {
    return v.order_key.has_value();
  });
  if (ordered) {
    std::stable_sort(values.begin(), values.end(),
                     [](const SecretValue& a, const SecretValue& b) {
                       return *a.order_key < *b.order_key;
                     });
  }
  std::map<std::string, int> index;
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    index[values[k].id] = k;
  }
  std::vector<int> class_of;
  class_of.reserve(members.size());
  for (const auto& v : per_member) class_of.push_back(index[v.id]);
  return SecretPartition::FromClassIds(std::move(class_of), std::move(values));
}

}  // namespace statleak
