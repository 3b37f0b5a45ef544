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

#include "statleak/tradeoff/mismatch.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "statleak/core/mechanism.h"
#include "statleak/mechanisms/qm.h"
#include "statleak/mechanisms/rr.h"

namespace statleak {

namespace {

BoundValue Exact(const Rational& q) { return {q, ToDouble(q)}; }
BoundValue Approx(double x) { return {std::nullopt, x}; }

BoundValue Min(const BoundValue& a, const BoundValue& b) {
  if (a.exact && b.exact) return *a.exact <= *b.exact ? a : b;
  return a.approx <= b.approx ? a : b;
}

// 2^m <= x, exactly.
bool PowTwoAtMost(int64_t m, int64_t x) {
  if (m >= 62) return false;
  return (int64_t{1} << m) <= x;
}

Rational Q(int64_t n) { return MakeRational(n); }
Rational Q(const BigInt& n) { return Rational(n); }

}  // namespace

double BoundValue::Log(LogBase base) const {
  if (exact) return LogOf(*exact, base);
  return approx > 0 ? LogOf(approx, base) : -INFINITY;
}

nlohmann::json MismatchBounds::ToJson(LogBase base) const {
  auto raw = [](const BoundValue& b) -> nlohmann::json {
    if (b.exact) return FormatRational(*b.exact);
    return b.approx;
  };
  return {{"privacy_lo", privacy_lo.Log(base)},
          {"privacy_hi", privacy_hi.Log(base)},
          {"privacy_lo_raw", raw(privacy_lo)},
          {"privacy_hi_raw", raw(privacy_hi)},
          {"lo_branch", lo_branch},
          {"lo_branch_condition", lo_branch_condition},
          {"distortion_lo", ToDouble(distortion_lo)},
          {"distortion_hi", ToDouble(distortion_hi)},
          {"log_base", LogBaseName(base)}};
}

Rational RrRobustExpEpsilonCap(int64_t tau, int64_t d_hat, int64_t s) {
  Rational cap = 1 + Rational(CompositionCount(tau, d_hat)) / Q(s);
  cap.canonicalize();
  return cap;
}

double RrRobustEpsilonCap(int64_t tau, int64_t d_hat, int64_t s) {
  return LogOf(RrRobustExpEpsilonCap(tau, d_hat, s), LogBase::kNatural);
}

absl::StatusOr<MismatchBounds> RrMismatchBounds(const TabularScale& sc,
                                                const Rational& e) {
  if (absl::Status st = sc.Validate(); !st.ok()) return st;
  if (e < 1) return absl::InvalidArgumentError("exp(epsilon) must be >= 1");
  const int64_t tau = sc.tau, s = sc.s, m = sc.missed();
  const int64_t dh = sc.d_hat(), dt = sc.d_star + sc.d_hat1;
  const Rational b0 = Q(CompositionCount(tau, dh));
  const Rational bs = Q(CompositionCount(tau, dt));
  const Rational em1 = e - 1;

  MismatchBounds out;
  Rational up1 = s * em1 / (b0 + em1) +
                 bs / (bs + em1) * Pow(1 + Q(tau) / Q(tau + dh - 1), m);
  Rational up2 =
      1 + s - s * Pow(Q(dh) / Q(tau + dt - 1), m) / (1 + em1 / bs);
  up1.canonicalize();
  up2.canonicalize();
  out.privacy_hi = Min(Exact(up1), Exact(up2));

  if (PowTwoAtMost(m, s)) {
    out.lo_branch = 1;
    out.lo_branch_condition = "d*-d0 <= log2 s";
    Rational lo = s * em1 / (bs + em1) +
                  b0 / (b0 + em1) * Pow(1 + Q(tau - m) / Q(tau + dt - 1), m);
    lo.canonicalize();
    out.privacy_lo = Exact(lo);
  } else if (m < s) {
    out.lo_branch = 2;
    out.lo_branch_condition = "log2 s < d*-d0 < s";
    double l = std::log2(static_cast<double>(s));
    double lo = ToDouble(s * em1 / (bs + em1)) +
                ToDouble(b0 / (b0 + em1)) *
                    std::pow(1 + (tau - l) / (tau + dt - 1), l);
    out.privacy_lo = Approx(lo);
  } else {
    out.lo_branch = 3;
    out.lo_branch_condition = "d*-d0 >= s";
    int64_t z = m / s;
    Rational lo = s - (s - 1) * Pow(Q(dh + z - 1) / Q(tau + dh), z);
    lo.canonicalize();
    out.privacy_lo = Exact(lo);
  }
  Rational r1 = em1 / b0, r2 = em1 / bs;
  out.distortion_lo = Q(dh - 1) / (dh * (1 + r1));
  out.distortion_hi = Q(dt - 1) / (dt * (1 + r2));
  out.distortion_lo.canonicalize();
  out.distortion_hi.canonicalize();
  return out;
}

absl::StatusOr<MismatchBounds> QmMismatchBounds(const TabularScale& sc,
                                                int64_t interval) {
  if (absl::Status st = sc.Validate(); !st.ok()) return st;
  if (interval < 1) return absl::InvalidArgumentError("interval must be >= 1");
  const int64_t tau = sc.tau, s = sc.s, m = sc.missed(), I = interval;
  const int64_t dh = sc.d_hat(), dt = sc.d_star + sc.d_hat1;
  if (dh < 2) {
    return absl::InvalidArgumentError(
        "QM bounds need d_hat0 + d_hat1 >= 2 (the formulas divide by "
        "d_hat0 + d_hat1 - 1)");
  }
  if (tau + dh - 2 <= 0 || tau + dt - 2 <= 0) {
    return absl::InvalidArgumentError("QM bounds need tau + d_hat - 2 > 0");
  }
  const Rational c = Q((s + I - 1) / I);
  const Rational f = Q(s / I);

  MismatchBounds out;
  Rational up1 = c * Pow(1 + Q(tau) / Q(tau + dh - 2), m);
  Rational up2 = c + s - s * Pow(Q(dh - 1) / Q(tau + dt - 2), m);
  up1.canonicalize();
  up2.canonicalize();
  out.privacy_hi = Min(Exact(up1), Exact(up2));

  const Rational denom = Q(tau * I + 2 * s * (dt - 2));
  if (PowTwoAtMost(m, I)) {
    out.lo_branch = 1;
    out.lo_branch_condition = "d*-d0 <= log2 I";
    Rational lo = f * Pow(1 + Q(tau * I - 2 * s * m) / denom, m);
    lo.canonicalize();
    out.privacy_lo = Exact(lo);
  } else if (m < I) {
    out.lo_branch = 2;
    out.lo_branch_condition = "log2 I < d*-d0 < I";
    double l = std::log2(static_cast<double>(I));
    double lo = ToDouble(f) *
                std::pow(1 + (tau * I - 2 * s * l) / ToDouble(denom), l);
    out.privacy_lo = Approx(lo);
  } else {
    out.lo_branch = 3;
    out.lo_branch_condition = "d*-d0 >= I";
    int64_t z = m / I;
    Rational base =
        Q(dh + z - 2) / (MakeRational(tau * I, 2 * s) + Q(dh - 1));
    Rational lo = s - (s - c) * Pow(base, z);
    lo.canonicalize();
    out.privacy_lo = Exact(lo);
  }
  int64_t half = I / 2;
  out.distortion_lo =
      MakeRational(1, 2) + Q(dh * half - tau) / Q(2 * tau * (dh - 1));
  out.distortion_hi =
      MakeRational(1, 2) + Q(dt * half - tau) / Q(2 * tau * (dt - 1));
  out.distortion_lo.canonicalize();
  out.distortion_hi.canonicalize();
  return out;
}

double QmDecayThreshold(int64_t s, int64_t interval, int64_t tau,
                        int64_t d_hat0) {
  double c = std::ceil(static_cast<double>(s) / interval);
  return (std::log(static_cast<double>(s)) - std::log(c)) /
         std::log1p(static_cast<double>(tau) / (tau + d_hat0));
}

absl::StatusOr<MismatchInstance> BuildMismatchInstance(
    const TabularScale& sc, uint64_t cap) {
  if (absl::Status st = sc.Validate(); !st.ok()) return st;
  if (sc.s != sc.tau + 1) {
    return absl::InvalidArgumentError(
        "the mismatch instance uses the fraction secret, so s = tau + 1");
  }
  std::vector<std::string> cats;
  for (int64_t i = 0; i < sc.d_hat0; ++i) cats.push_back(absl::StrCat("f", i));
  for (int64_t i = 0; i < sc.missed(); ++i) {
    cats.push_back(absl::StrCat("m", i));
  }
  for (int64_t i = 0; i < sc.d_hat1; ++i) cats.push_back(absl::StrCat("x", i));
  int total = static_cast<int>(cats.size());

  absl::StatusOr<std::vector<CategoricalParam>> feasible =
      EnumerateParams(static_cast<int>(sc.d_star), sc.tau, cap);
  if (!feasible.ok()) return feasible.status();
  MismatchInstance inst;
  for (const auto& p : *feasible) {
    std::vector<int64_t> c = p.counts();
    c.resize(total, 0);
    inst.inputs.emplace_back(std::move(c));
  }
  std::vector<SecretValue> values = FractionSecretValues(sc.tau);
  absl::StatusOr<SecretPartition> part =
      BuildPartition(inst.inputs, FractionSecret(0), &values);
  if (!part.ok()) return part.status();
  inst.partition = *std::move(part);
  std::vector<bool> estimated(total, false);
  for (int i = 0; i < total; ++i) {
    estimated[i] = i < sc.d_hat0 || i >= sc.d_star;
  }
  inst.support = EstimatedSupport(std::move(estimated));
  inst.outputs = ParameterSpace::Full(std::move(cats), sc.tau);
  return inst;
}

absl::StatusOr<PolicyMatrix> MismatchedRrPolicy(const MismatchInstance& inst,
                                                const Rational& exp_epsilon,
                                                uint64_t cap) {
  absl::StatusOr<RRMechanism> rr =
      RRMechanism::Create(inst.outputs, exp_epsilon, inst.support);
  if (!rr.ok()) return rr.status();
  return Materialize(*rr, inst.inputs, cap);
}

absl::StatusOr<PolicyMatrix> MismatchedQmPolicy(const MismatchInstance& inst,
                                                int64_t interval,
                                                uint64_t cap) {
  absl::StatusOr<QMMechanism> qm = QMMechanism::Create(
      inst.outputs, FractionSecret(0), FractionSecretValues(inst.outputs.tau()),
      interval, 0, inst.support);
  if (!qm.ok()) return qm.status();
  return Materialize(*qm, inst.inputs, cap);
}

}  // namespace statleak
