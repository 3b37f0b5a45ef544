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

#include "statleak/mechanisms/qm.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

absl::StatusOr<QMMechanism> QMMechanism::Create(
    ParameterSpace outputs, SecretFn secret, std::vector<SecretValue> secrets,
    int64_t interval, std::optional<int> fraction_category,
    OutputSupport support) {
  if (interval < 1) return absl::InvalidArgumentError("interval must be >= 1");
  if (secrets.empty()) return absl::InvalidArgumentError("no secret values");
  QMMechanism m;
  m.ordered_ = std::all_of(secrets.begin(), secrets.end(),
                           [](const SecretValue& v) {
                             return v.order_key.has_value();
                           });
  if (m.ordered_) {
    for (size_t i = 1; i < secrets.size(); ++i) {
      if (!(*secrets[i - 1].order_key < *secrets[i].order_key)) {
        return absl::InvalidArgumentError("secrets must be strictly ascending");
      }
    }
  }
  if (fraction_category &&
      (*fraction_category < 0 || *fraction_category >= outputs.d() ||
       !m.ordered_)) {
    return absl::InvalidArgumentError("bad fraction category");
  }
  m.outputs_ = std::move(outputs);
  m.secret_ = std::move(secret);
  m.secrets_ = std::move(secrets);
  m.interval_ = interval;
  m.fraction_category_ = fraction_category;
  m.support_ = std::move(support);
  return m;
}

int64_t QMMechanism::RepresentativeRank(int64_t bin) const {
  return std::min(bin * interval_ + interval_ / 2 + 1, s());
}

absl::StatusOr<int64_t> QMMechanism::BinOf(const CategoricalParam& in) const {
  absl::StatusOr<SecretValue> g = secret_(in);
  if (!g.ok()) return g.status();
  auto it = std::find(secrets_.begin(), secrets_.end(), *g);
  if (it == secrets_.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("secret '", g->id, "' is not among the declared values"));
  }
  return (it - secrets_.begin()) / interval_;
}

absl::StatusOr<bool> QMMechanism::Releases(int64_t bin,
                                           const CategoricalParam& out) const {
  absl::StatusOr<SecretValue> g = secret_(out);
  if (!g.ok()) return g.status();
  if (ordered_) return *g == secrets_[RepresentativeRank(bin) - 1];
  auto it = std::find(secrets_.begin(), secrets_.end(), *g);
  return it != secrets_.end() && (it - secrets_.begin()) / interval_ == bin;
}

absl::StatusOr<std::vector<CategoricalParam>> QMMechanism::EnumerateRelease(
    const CategoricalParam& in) const {
  absl::StatusOr<int64_t> bin = BinOf(in);
  if (!bin.ok()) return bin.status();
  absl::StatusOr<std::vector<CategoricalParam>> members = outputs_.Members();
  if (!members.ok()) return members.status();
  std::vector<bool> allowed = AllowedFor(support_, in);
  std::vector<CategoricalParam> out;
  for (const auto& m : *members) {
    if (!WithinSupport(m, allowed)) continue;
    absl::StatusOr<bool> r = Releases(*bin, m);
    if (!r.ok()) return r.status();
    if (*r) out.push_back(m);
  }
  return out;
}

absl::StatusOr<BigInt> QMMechanism::ReleaseSetSize(
    const CategoricalParam& in) const {
  if (!fraction_category_ || !outputs_.implicit()) {
    absl::StatusOr<std::vector<CategoricalParam>> set = EnumerateRelease(in);
    if (!set.ok()) return set.status();
    return BigInt(static_cast<unsigned long>(set->size()));
  }
  absl::StatusOr<int64_t> bin = BinOf(in);
  if (!bin.ok()) return bin.status();
  int c = *fraction_category_;
  Rational v = *secrets_[RepresentativeRank(*bin) - 1].order_key *
               Rational(outputs_.tau());
  if (v.get_den() != 1 || v < 0 || v > outputs_.tau()) return BigInt(0);
  int64_t target = v.get_num().get_si();
  std::vector<bool> allowed = AllowedFor(support_, in);
  if (!allowed[c] && target > 0) return BigInt(0);
  int64_t others = 0;
  for (int i = 0; i < outputs_.d(); ++i) {
    if (i != c && allowed[i]) ++others;
  }
  return CompositionCount(outputs_.tau() - target, others);
}

absl::StatusOr<Rational> QMMechanism::Likelihood(
    const CategoricalParam& in, const CategoricalParam& out) const {
  if (in.d() != outputs_.d()) {
    return absl::InvalidArgumentError("input does not match the output shape");
  }
  absl::StatusOr<int64_t> bin = BinOf(in);
  if (!bin.ok()) return bin.status();
  absl::StatusOr<BigInt> n = ReleaseSetSize(in);
  if (!n.ok()) return n.status();
  if (*n == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("empty release set for ", in.Label()));
  }
  if (!outputs_.Contains(out)) return Rational(0);
  if (!WithinSupport(out, AllowedFor(support_, in))) return Rational(0);
  absl::StatusOr<bool> r = Releases(*bin, out);
  if (!r.ok()) return r.status();
  if (!*r) return Rational(0);
  return Rational(BigInt(1), *n);
}

absl::StatusOr<CategoricalParam> QMMechanism::Sample(const CategoricalParam& in,
                                                     Rng& rng) const {
  absl::StatusOr<BigInt> n = ReleaseSetSize(in);
  if (!n.ok()) return n.status();
  if (*n == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("empty release set for ", in.Label()));
  }
  if (!fraction_category_ || !outputs_.implicit()) {
    absl::StatusOr<std::vector<CategoricalParam>> set = EnumerateRelease(in);
    if (!set.ok()) return set.status();
    return (*set)[rng.Uniform(set->size())];
  }
  int c = *fraction_category_;
  int64_t bin = *BinOf(in);
  Rational v = *secrets_[RepresentativeRank(bin) - 1].order_key *
               Rational(outputs_.tau());
  int64_t target = v.get_num().get_si();
  std::vector<bool> allowed = AllowedFor(support_, in);
  std::vector<int> others;
  for (int i = 0; i < outputs_.d(); ++i) {
    if (i != c && allowed[i]) others.push_back(i);
  }
  std::vector<int64_t> counts =
      UniformOver(outputs_.tau() - target, outputs_.d(), others, rng);
  counts[c] = target;
  return CategoricalParam(std::move(counts));
}

}  // namespace statleak
