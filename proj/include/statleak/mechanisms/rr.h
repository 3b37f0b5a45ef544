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

#ifndef STATLEAK_MECHANISMS_RR_H_
#define STATLEAK_MECHANISMS_RR_H_

#include "absl/status/statusor.h"
#include "statleak/core/mechanism.h"
#include "statleak/mechanisms/support.h"

namespace statleak {

// Randomized response over parameters: keep theta with weight e^eps, every
// other admissible output with weight 1.
class RRMechanism : public Mechanism {
 public:
  // exp_epsilon >= 1, held exactly.
  static absl::StatusOr<RRMechanism> Create(ParameterSpace outputs,
                                            Rational exp_epsilon,
                                            OutputSupport support = {});
  static absl::StatusOr<RRMechanism> FromEpsilon(ParameterSpace outputs,
                                                 double epsilon,
                                                 OutputSupport support = {});
  // The eps -> infinity limit: the identity.
  static RRMechanism Infinite(ParameterSpace outputs,
                              OutputSupport support = {});

  std::string name() const override { return "rr"; }
  const ParameterSpace& output_space() const override { return outputs_; }
  absl::StatusOr<Rational> Likelihood(
      const CategoricalParam& in, const CategoricalParam& out) const override;
  absl::StatusOr<CategoricalParam> Sample(const CategoricalParam& in,
                                          Rng& rng) const override;

  const Rational& exp_epsilon() const { return exp_epsilon_; }
  bool infinite() const { return infinite_; }
  // Number of outputs admissible for this input.
  absl::StatusOr<BigInt> OutputCount(const CategoricalParam& in) const;

 private:
  RRMechanism(ParameterSpace outputs, Rational e, bool inf,
              OutputSupport support)
      : outputs_(std::move(outputs)),
        exp_epsilon_(std::move(e)),
        infinite_(inf),
        support_(std::move(support)) {}

  absl::Status CheckInput(const CategoricalParam& in) const;

  ParameterSpace outputs_;
  Rational exp_epsilon_;
  bool infinite_;
  OutputSupport support_;
};

}  // namespace statleak

#endif  // STATLEAK_MECHANISMS_RR_H_
