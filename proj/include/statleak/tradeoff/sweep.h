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


#ifndef STATLEAK_TRADEOFF_SWEEP_H_
#define STATLEAK_TRADEOFF_SWEEP_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "statleak/core/param.h"
#include "statleak/core/rational.h"
#include "statleak/tradeoff/closed_form.h"

namespace statleak {

struct TradeoffPoint {
  std::string mechanism;
  double hyperparam = 0;  // epsilon for RR, I for QM and MaxL.
  std::optional<double> privacy;
  std::optional<double> privacy_lo;
  std::optional<double> privacy_hi;
  std::optional<double> distortion;
  std::optional<double> distortion_lo;
  std::optional<double> distortion_hi;
  std::string method;  // closed_form, exact_enum or monte_carlo.
  std::string error;   // Empty on success.
  int bound_branch = 0;  // Lower-bound branch under mismatch, else 0.

  bool ok() const { return error.empty(); }
};

struct SweepOptions {
  uint64_t cap = kDefaultEnumCap;
  uint64_t seed = 0;
  int mc_samples = 2000;
  int jobs = 1;
  LogBase base = LogBase::kBase2;
};

// One point per grid value. A matched scale (d_star == d_hat0, d_hat1 == 0)
// uses the closed forms for RR and QM. A mismatched scale attaches the
// bounds and, when the instance fits under the cap, the exact values of the
// mismatched policy. MaxL has no closed form and is always enumerated.
// Each point depends only on (family, scale, its grid value, seed).
absl::StatusOr<std::vector<TradeoffPoint>> TradeoffSweep(
    absl::string_view family, const TabularScale& scale,
    const std::vector<double>& grid, const SweepOptions& opts = {});

// Header plus one row per point; missing values are empty cells.
std::string SweepToCsv(const std::vector<TradeoffPoint>& points);

}  // namespace statleak

#endif  // STATLEAK_TRADEOFF_SWEEP_H_
