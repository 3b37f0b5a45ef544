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

#include "statleak/mechanisms/maxl.h"

#include <algorithm>
#include <optional>

#include "absl/status/status.h"
#include "statleak/mechanisms/support.h"

namespace statleak {

namespace {

// Per-input costs, largest first.
using Profile = std::vector<Rational>;

Profile Sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

absl::StatusOr<MaxLResult> MaxLGreedy(
    const std::vector<CategoricalParam>& inputs,
    const std::vector<CategoricalParam>& candidates, const CostFn& cost_fn) {
  if (candidates.empty()) {
    return absl::InvalidArgumentError("MaxL needs at least one candidate");
  }
  CostFn cost = cost_fn ? cost_fn : CostFn([](const CategoricalParam& a,
                                              const CategoricalParam& b) {
    return TvDistance(a, b);
  });
  size_t n = inputs.size(), m = candidates.size();
  std::vector<std::vector<Rational>> u(n, std::vector<Rational>(m));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) u[i][j] = cost(inputs[i], candidates[j]);
  }

  MaxLResult r;
  std::vector<char> in_set(m, 0);
  std::vector<Rational> current;  // Empty until the first pick.
  std::optional<Profile> current_profile;
  while (r.selected.size() < m) {
    int best = -1;
    Profile best_profile;
    std::vector<Rational> best_costs;
    for (size_t j = 0; j < m; ++j) {
      if (in_set[j]) continue;
      std::vector<Rational> costs(n);
      for (size_t i = 0; i < n; ++i) {
        costs[i] = current.empty() ? u[i][j] : std::min(current[i], u[i][j]);
      }
      Profile p = Sorted(costs);
      if (best < 0 || p < best_profile) {
        best = static_cast<int>(j);
        best_profile = std::move(p);
        best_costs = std::move(costs);
      }
    }
    if (current_profile && !(best_profile < *current_profile)) break;
    in_set[best] = 1;
    r.selected.push_back(best);
    current = std::move(best_costs);
    current_profile = std::move(best_profile);
  }

  r.assignment.assign(n, -1);
  r.worst_cost = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (!in_set[j]) continue;
      if (r.assignment[i] < 0 || u[i][j] < u[i][r.assignment[i]]) {
        r.assignment[i] = static_cast<int>(j);
      }
    }
    r.worst_cost = std::max(r.worst_cost, u[i][r.assignment[i]]);
  }
  return r;
}

absl::StatusOr<MappedMechanism> BuildMaxL(
    const std::vector<std::string>& categories,
    const std::vector<CategoricalParam>& inputs,
    const std::vector<CategoricalParam>& candidates, const CostFn& cost) {
  absl::StatusOr<MaxLResult> r = MaxLGreedy(inputs, candidates, cost);
  if (!r.ok()) return r.status();
  std::vector<int> chosen = r->selected;
  std::sort(chosen.begin(), chosen.end());
  std::vector<CategoricalParam> outputs;
  for (int j : chosen) outputs.push_back(candidates[j]);
  int64_t tau = candidates[0].tau();
  absl::StatusOr<ParameterSpace> space =
      ParameterSpace::Explicit(categories, tau, outputs);
  if (!space.ok()) return space.status();
  std::vector<CategoricalParam> images;
  for (int j : r->assignment) images.push_back(candidates[j]);
  return MappedMechanism("maxl", *std::move(space), inputs, std::move(images));
}

std::vector<CategoricalParam> BinCandidates(int d, int64_t tau, int category,
                                            int64_t interval, Rng& rng) {
  int64_t s = tau + 1;
  std::vector<CategoricalParam> out;
  std::vector<int> others;
  for (int i = 0; i < d; ++i) {
    if (i != category) others.push_back(i);
  }
  for (int64_t lo = 0; lo < s; lo += interval) {
    int64_t hi = std::min(lo + interval, s);
    // Uniform over the union of the bin's classes: weight each secret value
    // by its class size, then draw uniformly inside the class.
    std::vector<int64_t> values;
    std::vector<BigInt> sizes;
    BigInt total = 0;
    for (int64_t v = lo; v < hi; ++v) {
      BigInt n = CompositionCount(tau - v, static_cast<int64_t>(others.size()));
      if (n == 0) continue;
      values.push_back(v);
      sizes.push_back(n);
      total += n;
    }
    if (values.empty()) continue;
    std::vector<Rational> probs;
    for (const BigInt& n : sizes) probs.push_back(Rational(n, total));
    for (auto& p : probs) p.canonicalize();
    int64_t target = values[SampleIndex(probs, rng)];
    std::vector<int64_t> counts = UniformOver(tau - target, d, others, rng);
    counts[category] = target;
    out.emplace_back(std::move(counts));
  }
  return out;
}

}  // namespace statleak
