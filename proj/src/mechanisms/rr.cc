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

#include "statleak/mechanisms/rr.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

absl::StatusOr<RRMechanism> RRMechanism::Create(ParameterSpace outputs,
                                                Rational exp_epsilon,
                                                OutputSupport support) {
  if (exp_epsilon < 1) {
    return absl::InvalidArgumentError("exp(epsilon) must be at least 1");
  }
  return RRMechanism(std::move(outputs), std::move(exp_epsilon), false,
                     std::move(support));
}

absl::StatusOr<RRMechanism> RRMechanism::FromEpsilon(ParameterSpace outputs,
                                                     double epsilon,
                                                     OutputSupport support) {
  if (std::isinf(epsilon) && epsilon > 0) {
    return Infinite(std::move(outputs), std::move(support));
  }
  if (!(epsilon >= 0)) {
    return absl::InvalidArgumentError("epsilon must be non-negative");
  }
  return Create(std::move(outputs), ExactFromDouble(std::exp(epsilon)),
                std::move(support));
}

RRMechanism RRMechanism::Infinite(ParameterSpace outputs,
                                  OutputSupport support) {
  return RRMechanism(std::move(outputs), Rational(1), true,
                     std::move(support));
}

absl::Status RRMechanism::CheckInput(const CategoricalParam& in) const {
  if (!outputs_.Contains(in)) {
    return absl::InvalidArgumentError(
        absl::StrCat(in.Label(), " is outside the output space"));
  }
  return absl::OkStatus();
}

absl::StatusOr<BigInt> RRMechanism::OutputCount(
    const CategoricalParam& in) const {
  std::vector<bool> allowed = AllowedFor(support_, in);
  if (outputs_.implicit()) {
    int64_t a = 0;
    for (int i = 0; i < outputs_.d(); ++i) a += allowed[i] ? 1 : 0;
    return CompositionCount(outputs_.tau(), a);
  }
  absl::StatusOr<std::vector<CategoricalParam>> members = outputs_.Members();
  if (!members.ok()) return members.status();
  BigInt n = 0;
  for (const auto& m : *members) n += WithinSupport(m, allowed) ? 1 : 0;
  return n;
}

absl::StatusOr<Rational> RRMechanism::Likelihood(
    const CategoricalParam& in, const CategoricalParam& out) const {
  if (absl::Status s = CheckInput(in); !s.ok()) return s;
  if (!outputs_.Contains(out)) return Rational(0);
  if (infinite_) return Rational(in == out ? 1 : 0);
  if (!WithinSupport(out, AllowedFor(support_, in))) return Rational(0);
  absl::StatusOr<BigInt> n = OutputCount(in);
  if (!n.ok()) return n.status();
  Rational denom = Rational(*n) + exp_epsilon_ - 1;
  return Rational((in == out ? exp_epsilon_ : Rational(1)) / denom);
}

absl::StatusOr<CategoricalParam> RRMechanism::Sample(const CategoricalParam& in,
                                                     Rng& rng) const {
  if (absl::Status s = CheckInput(in); !s.ok()) return s;
  if (infinite_) return in;
  absl::StatusOr<BigInt> n = OutputCount(in);
  if (!n.ok()) return n.status();
  Rational keep = exp_epsilon_ / (Rational(*n) + exp_epsilon_ - 1);
  if (*n == 1 || rng.Bernoulli(keep)) return in;
  std::vector<bool> allowed = AllowedFor(support_, in);
  if (!outputs_.implicit()) {
    std::vector<CategoricalParam> others;
    for (const auto& m : *outputs_.Members()) {
      if (m != in && WithinSupport(m, allowed)) others.push_back(m);
    }
    return others[rng.Uniform(others.size())];
  }
  std::vector<int> cats;
  for (int i = 0; i < outputs_.d(); ++i) {
    if (allowed[i]) cats.push_back(i);
  }
  if (static_cast<int>(cats.size()) <= 64 && n->fits_ulong_p()) {
    // Uniform index among the others: skip over the input's own rank.
    std::vector<int64_t> sub;
    for (int c : cats) sub.push_back(in.count(c));
    BigInt own = *RankParam(CategoricalParam(sub));
    BigInt idx = rng.UniformBig(*n - 1);
    if (idx >= own) idx += 1;
    std::vector<int64_t> comp =
        UnrankParam(idx, static_cast<int>(cats.size()), in.tau())->counts();
    std::vector<int64_t> full(outputs_.d(), 0);
    for (size_t i = 0; i < cats.size(); ++i) full[cats[i]] = comp[i];
    return CategoricalParam(std::move(full));
  }
  while (true) {
    CategoricalParam cand(UniformOver(in.tau(), outputs_.d(), cats, rng));
    if (cand != in) return cand;
  }
}

}  // namespace statleak
