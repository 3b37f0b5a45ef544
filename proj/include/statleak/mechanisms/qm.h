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

#ifndef STATLEAK_MECHANISMS_QM_H_
#define STATLEAK_MECHANISMS_QM_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/mechanism.h"
#include "statleak/core/secret.h"
#include "statleak/mechanisms/support.h"

namespace statleak {

// Quantization: secrets g_1 < ... < g_s are cut into bins of I consecutive
// values; an input in bin k is released as a uniform parameter whose secret is
// the bin representative g_{m_k}, m_k = min(kI + floor(I/2) + 1, s).
//
// Without an order, a bin is I consecutive secrets in list order and the
// release is uniform over every parameter whose secret lies in the bin.
class QMMechanism : public Mechanism {
 public:
  // `secrets` in ascending order. When `fraction_category` is set the secret
  // function must be FractionSecret of that category, which enables counting
  // and sampling without enumerating the output space.
  static absl::StatusOr<QMMechanism> Create(
      ParameterSpace outputs, SecretFn secret, std::vector<SecretValue> secrets,
      int64_t interval, std::optional<int> fraction_category = std::nullopt,
      OutputSupport support = {});

  std::string name() const override { return "qm"; }
  const ParameterSpace& output_space() const override { return outputs_; }
  absl::StatusOr<Rational> Likelihood(
      const CategoricalParam& in, const CategoricalParam& out) const override;
  absl::StatusOr<CategoricalParam> Sample(const CategoricalParam& in,
                                          Rng& rng) const override;

  int64_t s() const { return static_cast<int64_t>(secrets_.size()); }
  int64_t interval() const { return interval_; }
  int64_t num_bins() const { return (s() + interval_ - 1) / interval_; }
  bool ordered() const { return ordered_; }
  // 1-based rank of the representative of bin k.
  int64_t RepresentativeRank(int64_t bin) const;
  absl::StatusOr<int64_t> BinOf(const CategoricalParam& in) const;
  absl::StatusOr<BigInt> ReleaseSetSize(const CategoricalParam& in) const;

 private:
  QMMechanism() = default;

  // Whether `out` is in the release set of `in`'s bin (support aside).
  absl::StatusOr<bool> Releases(int64_t bin, const CategoricalParam& out) const;
  absl::StatusOr<std::vector<CategoricalParam>> EnumerateRelease(
      const CategoricalParam& in) const;

  ParameterSpace outputs_ = ParameterSpace::Full(1, 0);
  SecretFn secret_;
  std::vector<SecretValue> secrets_;
  int64_t interval_ = 1;
  std::optional<int> fraction_category_;
  OutputSupport support_;
  bool ordered_ = true;
};

}  // namespace statleak

#endif  // STATLEAK_MECHANISMS_QM_H_
