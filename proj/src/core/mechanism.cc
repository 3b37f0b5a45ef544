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

#include "statleak/core/mechanism.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

std::vector<std::string> Labels(const std::vector<CategoricalParam>& params) {
  std::vector<std::string> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(p.Label());
  return out;
}

absl::StatusOr<PolicyMatrix> Materialize(
    const Mechanism& mech, const std::vector<CategoricalParam>& inputs,
    uint64_t cap) {
  absl::StatusOr<std::vector<CategoricalParam>> outputs =
      mech.output_space().Members(cap);
  if (!outputs.ok()) return outputs.status();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(inputs.size());
  for (const auto& in : inputs) {
    std::vector<Rational> row;
    row.reserve(outputs->size());
    for (const auto& out : *outputs) {
      absl::StatusOr<Rational> p = mech.Likelihood(in, out);
      if (!p.ok()) return p.status();
      row.push_back(*std::move(p));
    }
    rows.push_back(std::move(row));
  }
  return PolicyMatrix::Create(Labels(inputs), Labels(*outputs),
                              std::move(rows));
}

MappedMechanism::MappedMechanism(std::string name, ParameterSpace outputs,
                                 std::vector<CategoricalParam> domain,
                                 std::vector<CategoricalParam> images)
    : name_(std::move(name)),
      outputs_(std::move(outputs)),
      domain_(std::move(domain)),
      images_(std::move(images)) {}

absl::StatusOr<CategoricalParam> MappedMechanism::Map(
    const CategoricalParam& in) const {
  auto it = std::find(domain_.begin(), domain_.end(), in);
  if (it == domain_.end()) {
    return absl::NotFoundError(
        absl::StrCat(in.Label(), " is outside the mechanism domain"));
  }
  return images_[it - domain_.begin()];
}

absl::StatusOr<Rational> MappedMechanism::Likelihood(
    const CategoricalParam& in, const CategoricalParam& out) const {
  absl::StatusOr<CategoricalParam> f = Map(in);
  if (!f.ok()) return f.status();
  return Rational(*f == out ? 1 : 0);
}

absl::StatusOr<CategoricalParam> MappedMechanism::Sample(
    const CategoricalParam& in, Rng&) const {
  return Map(in);
}

absl::StatusOr<Rational> IdentityMechanism::Likelihood(
    const CategoricalParam& in, const CategoricalParam& out) const {
  if (!space_.Contains(in)) {
    return absl::InvalidArgumentError(
        absl::StrCat(in.Label(), " is outside the output space"));
  }
  return Rational(in == out ? 1 : 0);
}

absl::StatusOr<CategoricalParam> IdentityMechanism::Sample(
    const CategoricalParam& in, Rng&) const {
  if (!space_.Contains(in)) {
    return absl::InvalidArgumentError(
        absl::StrCat(in.Label(), " is outside the output space"));
  }
  return in;
}

absl::StatusOr<Rational> ConstantMechanism::Likelihood(
    const CategoricalParam&, const CategoricalParam& out) const {
  return Rational(out == point_ ? 1 : 0);
}

absl::StatusOr<CategoricalParam> ConstantMechanism::Sample(
    const CategoricalParam&, Rng&) const {
  return point_;
}

}  // namespace statleak
