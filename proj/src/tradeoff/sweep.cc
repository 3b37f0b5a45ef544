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


#include "statleak/tradeoff/sweep.h"

#include <atomic>
#include <cmath>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "statleak/core/mechanism.h"
#include "statleak/core/rng.h"
#include "statleak/core/secret.h"
#include "statleak/core/space.h"
#include "statleak/leakage/sml.h"
#include "statleak/mechanisms/maxl.h"
#include "statleak/mechanisms/qm.h"
#include "statleak/mechanisms/rr.h"
#include "statleak/tradeoff/distortion.h"
#include "statleak/tradeoff/mismatch.h"

namespace statleak {

namespace {

bool Matched(const TabularScale& sc) {
  return sc.d_star == sc.d_hat0 && sc.d_hat1 == 0;
}

std::vector<std::string> MismatchCategories(const TabularScale& sc) {
  std::vector<std::string> cats;
  for (int64_t i = 0; i < sc.d_hat0; ++i) cats.push_back(absl::StrCat("f", i));
  for (int64_t i = 0; i < sc.missed(); ++i) cats.push_back(absl::StrCat("m", i));
  for (int64_t i = 0; i < sc.d_hat1; ++i) cats.push_back(absl::StrCat("x", i));
  return cats;
}

OutputSupport MismatchSupport(const TabularScale& sc) {
  std::vector<bool> est(sc.d_star + sc.d_hat1, false);
  for (size_t i = 0; i < est.size(); ++i) {
    est[i] = static_cast<int64_t>(i) < sc.d_hat0 ||
             static_cast<int64_t>(i) >= sc.d_star;
  }
  return EstimatedSupport(std::move(est));
}

// Point masses on each truly feasible category.
std::vector<CategoricalParam> PointMasses(const TabularScale& sc) {
  std::vector<CategoricalParam> out;
  int total = static_cast<int>(sc.d_star + sc.d_hat1);
  for (int64_t i = 0; i < sc.d_star; ++i) {
    std::vector<int64_t> c(total, 0);
    c[i] = sc.tau;
    out.emplace_back(std::move(c));
  }
  return out;
}

void SetBounds(const MismatchBounds& b, LogBase base, TradeoffPoint& p) {
  p.privacy_lo = b.privacy_lo.Log(base);
  p.privacy_hi = b.privacy_hi.Log(base);
  p.distortion_lo = ToDouble(b.distortion_lo);
  p.distortion_hi = ToDouble(b.distortion_hi);
  p.bound_branch = b.lo_branch;
}

// Exact SML and distortion of a materialized mismatched policy.
absl::Status ExactMismatch(const MismatchInstance& inst,
                           const PolicyMatrix& policy, const SweepOptions& o,
                           TradeoffPoint& p) {
  BruteForceOptions bf{o.cap, 1, o.base};
  absl::StatusOr<LeakageReport> rep =
      SmlBruteForce(policy, inst.partition, bf);
  if (!rep.ok()) return rep.status();
  absl::StatusOr<std::vector<CategoricalParam>> outs =
      inst.outputs.Members(o.cap);
  if (!outs.ok()) return outs.status();
  absl::StatusOr<DistortionResult> dist =
      DistortionExact(policy, inst.inputs, *outs);
  if (!dist.ok()) return dist.status();
  p.privacy = rep->sml;
  p.distortion = ToDouble(dist->value);
  p.method = "exact_enum";
  return absl::OkStatus();
}

absl::Status McDistortion(const Mechanism& mech, const TabularScale& sc,
                          const SweepOptions& o, uint64_t stream,
                          TradeoffPoint& p) {
  Rng rng = Rng(o.seed).Split(stream);
  absl::StatusOr<McEstimate> est =
      DistortionMc(mech, PointMasses(sc), o.mc_samples, rng);
  if (!est.ok()) return est.status();
  p.distortion = est->estimate;
  p.method = "monte_carlo";
  return absl::OkStatus();
}

absl::Status RrPoint(const TabularScale& sc, double eps, const SweepOptions& o,
                     TradeoffPoint& p) {
  if (!(eps >= 0) || std::isinf(eps)) {
    return absl::InvalidArgumentError("epsilon must be finite and >= 0");
  }
  Rational e = ExactFromDouble(std::exp(eps));
  if (e < 1) e = 1;
  if (Matched(sc)) {
    p.privacy = RrPrivacyClosed(sc, e, o.base);
    p.distortion = ToDouble(RrDistortionClosed(sc, e));
    p.method = "closed_form";
    return absl::OkStatus();
  }
  absl::StatusOr<MismatchBounds> b = RrMismatchBounds(sc, e);
  if (!b.ok()) return b.status();
  SetBounds(*b, o.base, p);
  absl::StatusOr<MismatchInstance> inst = BuildMismatchInstance(sc, o.cap);
  if (inst.ok()) {
    absl::StatusOr<PolicyMatrix> pol = MismatchedRrPolicy(*inst, e, o.cap);
    if (pol.ok() && ExactMismatch(*inst, *pol, o, p).ok()) {
      return absl::OkStatus();
    }
  }
  absl::StatusOr<RRMechanism> rr = RRMechanism::Create(
      ParameterSpace::Full(MismatchCategories(sc), sc.tau), e,
      MismatchSupport(sc));
  if (!rr.ok()) return rr.status();
  return McDistortion(*rr, sc, o, 0, p);
}

absl::StatusOr<int64_t> IntervalOf(double v) {
  if (!(v >= 1) || v != std::floor(v) || v > 9.0e15) {
    return absl::InvalidArgumentError(
        absl::StrCat("interval must be a positive integer, got ", v));
  }
  return static_cast<int64_t>(v);
}

absl::Status QmPoint(const TabularScale& sc, double hv, const SweepOptions& o,
                     TradeoffPoint& p) {
  absl::StatusOr<int64_t> I = IntervalOf(hv);
  if (!I.ok()) return I.status();
  if (Matched(sc)) {
    // The distortion formula is exact only for two categories; with more it
    // sits below the true worst case, so enumerate when that is affordable.
    if (sc.d_hat0 >= 3) {
      absl::StatusOr<MismatchInstance> inst = BuildMismatchInstance(sc, o.cap);
      if (inst.ok()) {
        absl::StatusOr<PolicyMatrix> pol = MismatchedQmPolicy(*inst, *I, o.cap);
        if (pol.ok() && ExactMismatch(*inst, *pol, o, p).ok()) {
          return absl::OkStatus();
        }
      }
    }
    p.privacy = QmPrivacyClosed(sc.s, *I, o.base);
    p.method = "closed_form";
    absl::StatusOr<Rational> d = QmDistortionClosed(sc, *I);
    if (!d.ok()) return d.status();
    p.distortion = ToDouble(*d);
    return absl::OkStatus();
  }
  absl::StatusOr<MismatchBounds> b = QmMismatchBounds(sc, *I);
  if (!b.ok()) return b.status();
  SetBounds(*b, o.base, p);
  absl::StatusOr<MismatchInstance> inst = BuildMismatchInstance(sc, o.cap);
  if (inst.ok()) {
    absl::StatusOr<PolicyMatrix> pol = MismatchedQmPolicy(*inst, *I, o.cap);
    if (pol.ok() && ExactMismatch(*inst, *pol, o, p).ok()) {
      return absl::OkStatus();
    }
  }
  if (sc.s != sc.tau + 1) {
    return absl::InvalidArgumentError(
        "QM under mismatch uses the fraction secret, so s = tau + 1");
  }
  absl::StatusOr<QMMechanism> qm = QMMechanism::Create(
      ParameterSpace::Full(MismatchCategories(sc), sc.tau), FractionSecret(0),
      FractionSecretValues(sc.tau), *I, 0, MismatchSupport(sc));
  if (!qm.ok()) return qm.status();
  return McDistortion(*qm, sc, o, static_cast<uint64_t>(*I), p);
}

absl::Status MaxLPoint(const TabularScale& sc, double hv, const SweepOptions& o,
                       TradeoffPoint& p) {
  absl::StatusOr<int64_t> I = IntervalOf(hv);
  if (!I.ok()) return I.status();
  if (!Matched(sc) || sc.s != sc.tau + 1) {
    return absl::InvalidArgumentError(
        "the MaxL sweep needs a matched scale with s = tau + 1");
  }
  int d = static_cast<int>(sc.d_hat0);
  absl::StatusOr<std::vector<CategoricalParam>> inputs =
      EnumerateParams(d, sc.tau, o.cap);
  if (!inputs.ok()) return inputs.status();
  // Keyed by I, not grid position, so a point does not depend on its
  // neighbours.
  Rng rng = Rng(o.seed).Split(static_cast<uint64_t>(*I));
  std::vector<CategoricalParam> cands =
      BinCandidates(d, sc.tau, 0, *I, rng);
  ParameterSpace full = ParameterSpace::Full(d, sc.tau);
  absl::StatusOr<MappedMechanism> mech =
      BuildMaxL(full.categories(), *inputs, cands);
  if (!mech.ok()) return mech.status();
  absl::StatusOr<PolicyMatrix> pol = Materialize(*mech, *inputs, o.cap);
  if (!pol.ok()) return pol.status();
  std::vector<SecretValue> values = FractionSecretValues(sc.tau);
  absl::StatusOr<SecretPartition> part =
      BuildPartition(*inputs, FractionSecret(0), &values);
  if (!part.ok()) return part.status();
  absl::StatusOr<LeakageReport> rep = SmlDeterministic(*pol, *part, o.base);
  if (!rep.ok()) return rep.status();
  absl::StatusOr<std::vector<CategoricalParam>> outs =
      mech->output_space().Members(o.cap);
  if (!outs.ok()) return outs.status();
  absl::StatusOr<DistortionResult> dist = DistortionExact(*pol, *inputs, *outs);
  if (!dist.ok()) return dist.status();
  p.privacy = rep->sml;
  p.distortion = ToDouble(dist->value);
  p.method = "exact_enum";
  return absl::OkStatus();
}

std::string Cell(const std::optional<double>& v) {
  return v ? absl::StrFormat("%.12g", *v) : std::string();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

absl::StatusOr<std::vector<TradeoffPoint>> TradeoffSweep(
    absl::string_view family, const TabularScale& scale,
    const std::vector<double>& grid, const SweepOptions& opts) {
  if (absl::Status st = scale.Validate(); !st.ok()) return st;
  if (grid.empty()) return absl::InvalidArgumentError("empty grid");
  using PointFn = absl::Status (*)(const TabularScale&, double,
                                   const SweepOptions&, TradeoffPoint&);
  PointFn fn = nullptr;
  if (family == "rr") {
    fn = RrPoint;
  } else if (family == "qm") {
    fn = QmPoint;
  } else if (family == "maxl") {
    fn = MaxLPoint;
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown mechanism family '", family, "'"));
  }
  std::vector<TradeoffPoint> points(grid.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < grid.size(); i = next++) {
      TradeoffPoint& p = points[i];
      p.mechanism = std::string(family);
      p.hyperparam = grid[i];
      absl::Status st = fn(scale, grid[i], opts, p);
      if (!st.ok()) p.error = std::string(st.message());
    }
  };
  int jobs = std::max(1, std::min<int>(opts.jobs, grid.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return points;
}

std::string SweepToCsv(const std::vector<TradeoffPoint>& points) {
  std::string out =
      "mechanism,hyperparam,privacy,privacy_lo,privacy_hi,distortion,"
      "distortion_lo,distortion_hi,method,error\n";
  for (const auto& p : points) {
    absl::StrAppend(&out, p.mechanism, ",",
                    absl::StrFormat("%.12g", p.hyperparam), ",",
                    Cell(p.privacy), ",", Cell(p.privacy_lo), ",",
                    Cell(p.privacy_hi), ",", Cell(p.distortion), ",",
                    Cell(p.distortion_lo), ",", Cell(p.distortion_hi), ",",
                    p.method, ",", CsvField(p.error), "\n");
  }
  return out;
}

}  // namespace statleak
