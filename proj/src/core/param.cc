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

#include "statleak/core/param.h"

#include <numeric>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace statleak {

CategoricalParam::CategoricalParam(std::vector<int64_t> counts)
    : counts_(std::move(counts)),
      tau_(std::accumulate(counts_.begin(), counts_.end(), int64_t{0})) {}

absl::StatusOr<CategoricalParam> CategoricalParam::Create(
    std::vector<int64_t> counts, int64_t tau) {
  if (tau < 0) return absl::InvalidArgumentError("negative precision");
  int64_t sum = 0;
  for (int64_t c : counts) {
    if (c < 0) return absl::InvalidArgumentError("negative count");
    sum += c;
  }
  if (sum != tau) {
    return absl::InvalidArgumentError(
        absl::StrCat("counts sum to ", sum, " but tau is ", tau));
  }
  return CategoricalParam(std::move(counts));
}

absl::StatusOr<CategoricalParam> CategoricalParam::FromJson(
    const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("counts") || !j["counts"].is_array()) {
    return absl::InvalidArgumentError("parameter JSON needs a counts array");
  }
  std::vector<int64_t> counts;
  for (const auto& c : j["counts"]) {
    if (!c.is_number_integer()) {
      return absl::InvalidArgumentError("counts must be integers");
    }
    counts.push_back(c.get<int64_t>());
  }
  int64_t tau = std::accumulate(counts.begin(), counts.end(), int64_t{0});
  if (j.contains("tau")) tau = j["tau"].get<int64_t>();
  return Create(std::move(counts), tau);
}

Rational CategoricalParam::Mass(int i) const {
  if (tau_ == 0) return 0;
  return MakeRational(counts_[i], tau_);
}

std::string CategoricalParam::Label() const {
  return absl::StrCat("(", absl::StrJoin(counts_, ","), ")/", tau_);
}

nlohmann::json CategoricalParam::ToJson() const {
  return {{"tau", tau_}, {"counts", counts_}};
}

Rational TvDistance(const CategoricalParam& p, const CategoricalParam& q) {
  int d = std::max(p.d(), q.d());
  Rational acc = 0;
  for (int i = 0; i < d; ++i) {
    Rational a = i < p.d() ? p.Mass(i) : Rational(0);
    Rational b = i < q.d() ? q.Mass(i) : Rational(0);
    acc += abs(a - b);
  }
  return acc / 2;
}

absl::StatusOr<Rational> TvDistance(const CategoricalParam& p,
                                    const std::vector<std::string>& p_cats,
                                    const CategoricalParam& q,
                                    const std::vector<std::string>& q_cats) {
  if (static_cast<int>(p_cats.size()) != p.d() ||
      static_cast<int>(q_cats.size()) != q.d()) {
    return absl::InvalidArgumentError("category list length mismatch");
  }
  std::unordered_map<std::string, Rational> diff;
  for (int i = 0; i < p.d(); ++i) diff[p_cats[i]] += p.Mass(i);
  for (int i = 0; i < q.d(); ++i) diff[q_cats[i]] -= q.Mass(i);
  Rational acc = 0;
  for (const auto& [_, v] : diff) acc += abs(v);
  return Rational(acc / 2);
}

absl::StatusOr<std::vector<CategoricalParam>> EnumerateParams(int d,
                                                              int64_t tau,
                                                              uint64_t cap) {
  if (d < 1 || tau < 0) {
    return absl::InvalidArgumentError("need d >= 1 and tau >= 0");
  }
  BigInt size = CompositionCount(tau, d);
  if (size > BigInt(static_cast<unsigned long>(cap))) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "space of size ", size.get_str(), " exceeds enumeration cap ", cap));
  }
  std::vector<CategoricalParam> out;
  out.reserve(size.get_ui());
  // Odometer over the first d-1 coordinates; the last takes the remainder.
  std::vector<int64_t> c(d, 0);
  c[d - 1] = tau;
  while (true) {
    out.emplace_back(c);
    // Find the rightmost position < d-1 that can be incremented.
    int i = d - 2;
    while (i >= 0) {
      int64_t used = 0;
      for (int j = 0; j < i; ++j) used += c[j];
      if (used + c[i] < tau) break;
      --i;
    }
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < d; ++j) c[j] = 0;
    int64_t used = 0;
    for (int j = 0; j < d - 1; ++j) used += c[j];
    c[d - 1] = tau - used;
  }
  return out;
}

absl::StatusOr<BigInt> RankParam(const CategoricalParam& theta) {
  int d = theta.d();
  if (d < 1) return absl::InvalidArgumentError("empty parameter");
  BigInt rank = 0;
  int64_t remaining = theta.tau();
  for (int i = 0; i + 1 < d; ++i) {
    uint64_t k = static_cast<uint64_t>(d - i - 1);
    int64_t v = theta.count(i);
    rank += Binomial(remaining + k, k) - Binomial(remaining - v + k, k);
    remaining -= v;
  }
  return rank;
}

absl::StatusOr<CategoricalParam> UnrankParam(const BigInt& index, int d,
                                             int64_t tau) {
  if (d < 1 || tau < 0) {
    return absl::InvalidArgumentError("need d >= 1 and tau >= 0");
  }
  if (index < 0 || index >= CompositionCount(tau, d)) {
    return absl::OutOfRangeError(
        absl::StrCat("index ", index.get_str(), " out of range"));
  }
  std::vector<int64_t> c(d, 0);
  BigInt idx = index;
  int64_t remaining = tau;
  for (int i = 0; i + 1 < d; ++i) {
    uint64_t k = static_cast<uint64_t>(d - i - 1);
    // Binary search the smallest v with idx < C(R+k,k) - C(R-v-1+k,k).
    BigInt total = Binomial(remaining + k, k);
    int64_t lo = 0, hi = remaining;
    while (lo < hi) {
      int64_t mid = lo + (hi - lo) / 2;
      BigInt below = total - Binomial(remaining - mid - 1 + k, k);
      if (idx < below) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    idx -= total - Binomial(remaining - lo + k, k);
    c[i] = lo;
    remaining -= lo;
  }
  c[d - 1] = remaining;
  return CategoricalParam(std::move(c));
}

}  // namespace statleak
