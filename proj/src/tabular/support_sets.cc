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


#include "statleak/tabular/support_sets.h"

#include <algorithm>
#include <map>
#include <set>

#include "absl/strings/str_cat.h"

namespace statleak {

namespace {

std::vector<Combo> SortedUnique(std::vector<Combo> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Combo> Union(const std::vector<Combo>& a,
                         const std::vector<Combo>& b) {
  std::vector<Combo> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace

std::string ComboKey(const Combo& c) { return nlohmann::json(c).dump(); }

absl::StatusOr<std::vector<Combo>> CombosFromJson(const nlohmann::json& j,
                                                  size_t arity) {
  if (!j.is_array()) {
    return absl::InvalidArgumentError("support set must be a JSON list");
  }
  std::vector<Combo> out;
  for (const auto& e : j) {
    Combo c;
    auto cell = [](const nlohmann::json& x) {
      return x.is_string() ? x.get<std::string>() : x.dump();
    };
    if (e.is_array()) {
      for (const auto& x : e) c.push_back(cell(x));
    } else {
      c.push_back(cell(e));
    }
    if (c.size() != arity) {
      return absl::InvalidArgumentError(
          absl::StrCat("combo ", ComboKey(c), " has arity ", c.size(),
                       ", expected ", arity));
    }
    out.push_back(std::move(c));
  }
  return SortedUnique(std::move(out));
}

std::vector<Combo> SupportSets::EstimatedSet() const {
  return gamma_hat_star ? *gamma_hat_star : gamma;
}

std::vector<Combo> SupportSets::TrueSet() const {
  if (gamma_star) return *gamma_star;
  return Union(EstimatedSet(), gamma);
}

int64_t SupportSets::d_star() const {
  return static_cast<int64_t>(TrueSet().size());
}

int64_t SupportSets::d_hat0() const {
  std::vector<Combo> est = EstimatedSet(), truth = TrueSet(), both;
  std::set_intersection(est.begin(), est.end(), truth.begin(), truth.end(),
                        std::back_inserter(both));
  return static_cast<int64_t>(both.size());
}

int64_t SupportSets::d_hat1() const {
  return static_cast<int64_t>(EstimatedSet().size()) - d_hat0();
}

std::vector<Combo> SupportSets::Categories() const {
  return Union(gamma, EstimatedSet());
}

std::vector<std::string> SupportSets::CategoryLabels() const {
  std::vector<std::string> out;
  for (const auto& c : Categories()) out.push_back(ComboKey(c));
  return out;
}

TabularScale SupportSets::Scale(int64_t tau, int64_t s) const {
  return {tau, d_hat0(), d_hat1(), d_star(), s};
}

SupportSets ExtractSupport(const Dataset& ds) {
  std::map<Combo, int64_t> counts;
  for (const auto& r : ds.rows) ++counts[r];
  SupportSets out;
  out.columns = ds.columns;
  for (const auto& [c, n] : counts) {
    out.gamma.push_back(c);
    out.gamma_counts.push_back(n);
  }
  return out;
}

absl::Status AttachSupports(SupportSets& sets,
                            std::optional<std::vector<Combo>> gamma_star,
                            std::optional<std::vector<Combo>> gamma_hat_star) {
  const size_t arity = sets.columns.size();
  for (const auto* s : {&gamma_star, &gamma_hat_star}) {
    if (!*s) continue;
    for (const auto& c : **s) {
      if (c.size() != arity) {
        return absl::InvalidArgumentError(
            absl::StrCat("combo ", ComboKey(c), " has the wrong arity"));
      }
    }
  }
  if (gamma_star) {
    *gamma_star = SortedUnique(std::move(*gamma_star));
    for (const auto& c : sets.gamma) {
      if (!std::binary_search(gamma_star->begin(), gamma_star->end(), c)) {
        return absl::FailedPreconditionError(absl::StrCat(
            "observed combo ", ComboKey(c), " is missing from gamma_star"));
      }
    }
  }
  if (gamma_hat_star) *gamma_hat_star = SortedUnique(std::move(*gamma_hat_star));
  sets.gamma_star = std::move(gamma_star);
  sets.gamma_hat_star = std::move(gamma_hat_star);
  return absl::OkStatus();
}

absl::StatusOr<CategoricalParam> ToParam(const Dataset& ds,
                                         const SupportSets& sets,
                                         std::optional<int64_t> tau) {
  const int64_t n = static_cast<int64_t>(ds.n());
  if (n == 0) return absl::InvalidArgumentError("empty dataset");
  const int64_t t = tau.value_or(n);
  if (t < 1) return absl::InvalidArgumentError("tau must be >= 1");
  std::vector<Combo> cats = sets.Categories();
  std::map<Combo, int64_t> raw;
  for (const auto& r : ds.rows) ++raw[r];
  std::vector<int64_t> counts(cats.size(), 0);
  for (const auto& [c, k] : raw) {
    auto it = std::lower_bound(cats.begin(), cats.end(), c);
    if (it == cats.end() || *it != c) {
      return absl::InvalidArgumentError(
          absl::StrCat("row combo ", ComboKey(c), " is not a category"));
    }
    BigInt scaled = BigInt(static_cast<long>(k)) * static_cast<long>(t);
    if (scaled % n != 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "tau = ", t, " does not rescale the counts exactly (n = ", n,
          "); subsample instead"));
    }
    counts[it - cats.begin()] = BigInt(scaled / n).get_si();
  }
  return CategoricalParam::Create(std::move(counts), t);
}

}  // namespace statleak
