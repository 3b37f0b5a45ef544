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

#ifndef STATLEAK_CORE_MECHANISM_H_
#define STATLEAK_CORE_MECHANISM_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/param.h"
#include "statleak/core/policy.h"
#include "statleak/core/rng.h"
#include "statleak/core/space.h"

namespace statleak {

// Common interface: exact likelihood plus a seeded sampler.
class Mechanism {
 public:
  virtual ~Mechanism() = default;

  virtual std::string name() const = 0;
  virtual const ParameterSpace& output_space() const = 0;
  virtual absl::StatusOr<Rational> Likelihood(
      const CategoricalParam& in, const CategoricalParam& out) const = 0;
  virtual absl::StatusOr<CategoricalParam> Sample(const CategoricalParam& in,
                                                  Rng& rng) const = 0;
};

// Rows over the enumerated output space, one per input.
absl::StatusOr<PolicyMatrix> Materialize(
    const Mechanism& mech, const std::vector<CategoricalParam>& inputs,
    uint64_t cap = kDefaultEnumCap);

std::vector<std::string> Labels(const std::vector<CategoricalParam>& params);

// Deterministic mechanism given by an explicit map over an explicit output
// space. Covers identity, constant and MaxL.
class MappedMechanism : public Mechanism {
 public:
  MappedMechanism(std::string name, ParameterSpace outputs,
                  std::vector<CategoricalParam> domain,
                  std::vector<CategoricalParam> images);

  std::string name() const override { return name_; }
  const ParameterSpace& output_space() const override { return outputs_; }
  absl::StatusOr<Rational> Likelihood(
      const CategoricalParam& in, const CategoricalParam& out) const override;
  absl::StatusOr<CategoricalParam> Sample(const CategoricalParam& in,
                                          Rng& rng) const override;
  absl::StatusOr<CategoricalParam> Map(const CategoricalParam& in) const;

 private:
  std::string name_;
  ParameterSpace outputs_;
  std::vector<CategoricalParam> domain_;
  std::vector<CategoricalParam> images_;
};

// f(theta) = theta on any space.
class IdentityMechanism : public Mechanism {
 public:
  explicit IdentityMechanism(ParameterSpace space) : space_(std::move(space)) {}
  std::string name() const override { return "identity"; }
  const ParameterSpace& output_space() const override { return space_; }
  absl::StatusOr<Rational> Likelihood(
      const CategoricalParam& in, const CategoricalParam& out) const override;
  absl::StatusOr<CategoricalParam> Sample(const CategoricalParam& in,
                                          Rng& rng) const override;

 private:
  ParameterSpace space_;
};

// f(theta) = a fixed point.
class ConstantMechanism : public Mechanism {
 public:
  ConstantMechanism(ParameterSpace space, CategoricalParam point)
      : space_(std::move(space)), point_(std::move(point)) {}
  std::string name() const override { return "constant"; }
  const ParameterSpace& output_space() const override { return space_; }
  absl::StatusOr<Rational> Likelihood(
      const CategoricalParam& in, const CategoricalParam& out) const override;
  absl::StatusOr<CategoricalParam> Sample(const CategoricalParam& in,
                                          Rng& rng) const override;

 private:
  ParameterSpace space_;
  CategoricalParam point_;
};

}  // namespace statleak

#endif  // STATLEAK_CORE_MECHANISM_H_
