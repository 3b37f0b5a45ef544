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

#include "statleak/tradeoff/closed_form.h"

#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

absl::Status TabularScale::Validate() const {
  if (tau < 1) return absl::InvalidArgumentError("tau must be >= 1");
  if (d_hat0 < 1) return absl::InvalidArgumentError("d_hat0 must be >= 1");
  if (d_hat1 < 0) return absl::InvalidArgumentError("d_hat1 must be >= 0");
  if (d_star < d_hat0) {
    return absl::InvalidArgumentError("d_star must be >= d_hat0");
  }
  if (s < 1) return absl::InvalidArgumentError("s must be >= 1");
  return absl::OkStatus();
}

nlohmann::json TabularScale::ToJson() const {
  return {{"tau", tau},       {"d_hat0", d_hat0}, {"d_hat1", d_hat1},
          {"d_star", d_star}, {"s", s}};
}

absl::StatusOr<TabularScale> TabularScale::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("scale must be object");
  TabularScale sc;
  try {
    sc.tau = j.at("tau").get<int64_t>();
    sc.d_hat0 = j.at("d_hat0").get<int64_t>();
    sc.d_hat1 = j.value("d_hat1", int64_t{0});
    sc.d_star = j.value("d_star", sc.d_hat0);
    sc.s = j.value("s", sc.tau + 1);
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad scale: ", e.what()));
  }
  if (absl::Status st = sc.Validate(); !st.ok()) return st;
  return sc;
}

TabularScale TabularScale::Matched(int64_t tau, int64_t d) {
  return {tau, d, 0, d, tau + 1};
}

Rational RrR(int64_t tau, int64_t d, const Rational& exp_epsilon) {
  Rational r = (exp_epsilon - 1) / Rational(CompositionCount(tau, d));
  r.canonicalize();
  return r;
}

Rational RrPrivacyRaw(const TabularScale& scale, const Rational& exp_epsilon) {
  Rational r = RrR(scale.tau, scale.d_hat0, exp_epsilon);
  return Rational((1 + scale.s * r) / (1 + r));
}

double RrPrivacyClosed(const TabularScale& scale, const Rational& exp_epsilon,
                       LogBase base) {
  return LogOf(RrPrivacyRaw(scale, exp_epsilon), base);
}

Rational RrDistortionAtR(const TabularScale& scale, const Rational& r) {
  return Rational(Rational(scale.d_hat0 - 1) / (scale.d_hat0 * (1 + r)));
}

Rational RrDistortionClosed(const TabularScale& scale,
                            const Rational& exp_epsilon) {
  return RrDistortionAtR(scale, RrR(scale.tau, scale.d_hat0, exp_epsilon));
}

BigInt QmPrivacyRaw(int64_t s, int64_t interval) {
  return (s + interval - 1) / interval;
}

double QmPrivacyClosed(int64_t s, int64_t interval, LogBase base) {
  return LogOf(QmPrivacyRaw(s, interval), base);
}

absl::StatusOr<Rational> QmDistortionClosed(const TabularScale& scale,
                                            int64_t interval) {
  if (scale.d_hat0 < 2) {
    return absl::InvalidArgumentError(
        "QM distortion formula needs at least two categories");
  }
  if (interval < 1) return absl::InvalidArgumentError("interval must be >= 1");
  Rational num = scale.d_hat0 * (interval / 2) - scale.tau;
  Rational den = 2 * scale.tau * (scale.d_hat0 - 1);
  return Rational(MakeRational(1, 2) + num / den);
}

absl::StatusOr<Rational> RFromPrivacyRaw(int64_t s, const Rational& level) {
  if (level < 1 || level >= s) {
    return absl::InvalidArgumentError("privacy level must lie in [1, s)");
  }
  return Rational((level - 1) / (s - level));
}

absl::StatusOr<std::vector<ComparisonRow>> MechanismComparison(
    const TabularScale& scale, double budget, LogBase base) {
  if (absl::Status st = scale.Validate(); !st.ok()) return st;
  double log_s = LogOf(BigInt(static_cast<long>(scale.s)), base);
  if (budget >= log_s) {
    return absl::InvalidArgumentError(
        "budget at or above log s is trivial; every mechanism meets it");
  }
  std::vector<ComparisonRow> rows;
  std::set<std::string> levels_seen;
  for (int64_t I = 1; I <= scale.s; ++I) {
    BigInt c = QmPrivacyRaw(scale.s, I);
    if (LogOf(c, base) > budget + 1e-12) continue;
    absl::StatusOr<Rational> qm = QmDistortionClosed(scale, I);
    if (!qm.ok()) return qm.status();
    absl::StatusOr<Rational> r = RFromPrivacyRaw(scale.s, Rational(c));
    if (!r.ok()) return r.status();
    ComparisonRow row;
    row.interval = I;
    row.level = c;
    row.r = *r;
    row.rr_distortion = RrDistortionAtR(scale, *r);
    row.qm_distortion = *qm;
    if (*qm != 0) row.ratio = Rational(row.rr_distortion / *qm);
    row.frontier = levels_seen.insert(c.get_str()).second;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace statleak
