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


// Acceptance checks. Prints one line per criterion and exits non-zero when
// any criterion fails. Criterion 11 needs SML_CENSUS_CSV and is skipped
// without it.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "boost/math/distributions/chi_squared.hpp"
#include "statleak/core/mechanism.h"
#include "statleak/leakage/measures.h"
#include "statleak/leakage/sml.h"
#include "statleak/mechanisms/combinators.h"
#include "statleak/mechanisms/maxl.h"
#include "statleak/mechanisms/qm.h"
#include "statleak/mechanisms/rr.h"
#include "statleak/tabular/dataset.h"
#include "statleak/tabular/support_sets.h"
#include "statleak/tradeoff/closed_form.h"
#include "statleak/tradeoff/distortion.h"
#include "statleak/tradeoff/mismatch.h"
#include "test_util.h"

namespace statleak {
namespace {

enum class Verdict { kPass, kFail, kSkip };

int failures = 0;

void Report(int id, const char* name, Verdict v, const std::string& detail) {
  const char* tag = v == Verdict::kPass ? "PASS" : v == Verdict::kFail ? "FAIL" : "SKIP";
  if (v == Verdict::kFail) ++failures;
  std::printf("[%s] criterion %d (%s): %s\n", tag, id, name, detail.c_str());
  std::fflush(stdout);
}

Verdict Of(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

// Instances kept for the sandwich check.
struct Instance {
  PolicyMatrix policy;
  SecretPartition partition;
  Rational raw;
};
std::vector<Instance> sandwich_pool;

// Written out from the formulas, independent of the library's closed forms.
Rational LocalR(int64_t tau, int64_t d, const Rational& e) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), tau + d - 1, d - 1);
  return (e - 1) / Rational(b);
}

Rational LocalQmDistortion(int64_t tau, int64_t d, int64_t I) {
  Rational v = MakeRational(1, 2) + MakeRational(d * (I / 2) - tau, 2 * tau * (d - 1));
  v.canonicalize();
  return v;
}

SecretPartition FractionPartition(const std::vector<CategoricalParam>& ins,
                                  int64_t tau) {
  auto vals = FractionSecretValues(tau);
  return *BuildPartition(ins, FractionSecret(0), &vals);
}

SecretPartition RandomPartition(int n, int s, Rng& rng) {
  std::vector<int> cls(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.Shuffle(order);
  for (int i = 0; i < n; ++i) {
    cls[order[i]] = i < s ? i : static_cast<int>(rng.Uniform(s));
  }
  return *SecretPartition::FromClassIds(cls);
}

void Criterion1() {
  Rng rng(101);
  int total = 0, bad = 0;
  for (int t = 0; t < 240; ++t) {
    int d = 1 + static_cast<int>(rng.Uniform(3));
    int64_t tau = 1 + static_cast<int64_t>(rng.Uniform(4));
    auto ins = *EnumerateParams(d, tau);
    int n = static_cast<int>(ins.size());
    int m = 1 + static_cast<int>(rng.Uniform(n));
    std::vector<int> map(n);
    for (auto& x : map) x = static_cast<int>(rng.Uniform(m));
    auto pol = *PolicyMatrix::FromMap(Labels(ins),
                                      testing::Names("o", m), map);
    int s = 1 + static_cast<int>(rng.Uniform(std::min(4, n)));
    SecretPartition part = RandomPartition(n, s, rng);
    auto flow = SmlDeterministic(pol, part);
    auto brute = SmlBruteForce(pol, part);
    ++total;
    if (!flow.ok() || !brute.ok() || flow->raw_sum != brute->raw_sum) ++bad;
    if (brute.ok()) sandwich_pool.push_back({pol, part, brute->raw_sum});
  }
  Report(1, "flow equals brute force", Of(bad == 0 && total >= 200),
         absl::StrCat(total, " deterministic policies, ", bad, " mismatches"));
}

struct RrCase {
  PolicyMatrix policy;
  SecretPartition partition;
  Rational e;
};
std::vector<RrCase> rr_cases;

void Criterion2() {
  int total = 0;
  std::vector<std::string> bad;
  for (int d : {2, 3}) {
    for (int64_t tau : {2, 3, 4}) {
      ParameterSpace sp = ParameterSpace::Full(d, tau);
      auto ins = *sp.Members();
      SecretPartition part = FractionPartition(ins, tau);
      for (int e : {2, 3, 12}) {
        auto pol = *Materialize(*RRMechanism::Create(sp, e), ins);
        Rational r = LocalR(tau, d, e);
        int64_t s = tau + 1;
        Rational want_priv = (1 + s * r) / (1 + r);
        Rational want_dist = Rational(d - 1) / (d * (1 + r));
        want_priv.canonicalize();
        want_dist.canonicalize();
        auto got = *SmlBruteForce(pol, part);
        auto dist = *DistortionExact(pol, ins, ins);
        ++total;
        if (got.raw_sum != want_priv || dist.value != want_dist) {
          bad.push_back(absl::StrCat("(d=", d, ",tau=", tau, ",e=", e, ")"));
        }
        sandwich_pool.push_back({pol, part, got.raw_sum});
        rr_cases.push_back({pol, part, e});
      }
    }
  }
  Report(2, "RR closed form", Of(bad.empty()),
         absl::StrCat(total, " instances, ", bad.size(), " mismatches ",
                      absl::StrJoin(bad, " ")));
}

void Criterion3() {
  int privacy_checked = 0, privacy_bad = 0;
  int dist_checked[4] = {0}, dist_bad[4] = {0};
  std::vector<std::string> examples;
  for (int d : {2, 3}) {
    for (int64_t s = 2; s <= 9; ++s) {
      int64_t tau = s - 1;
      ParameterSpace sp = ParameterSpace::Full(d, tau);
      auto ins = *sp.Members();
      SecretPartition part = FractionPartition(ins, tau);
      for (int64_t I = 1; I <= s; ++I) {
        auto qm = *QMMechanism::Create(sp, FractionSecret(0),
                                       FractionSecretValues(tau), I, 0);
        auto pol = *Materialize(qm, ins);
        if (d == 2) {
          auto got = *SmlBruteForce(pol, part);
          ++privacy_checked;
          if (got.raw_sum != (s + I - 1) / I) ++privacy_bad;
          sandwich_pool.push_back({pol, part, got.raw_sum});
        }
        Rational exact = DistortionExact(pol, ins, ins)->value;
        Rational want = LocalQmDistortion(tau, d, I);
        ++dist_checked[d];
        if (exact != want) {
          ++dist_bad[d];
          if (examples.size() < 6) {
            examples.push_back(absl::StrCat("d=", d, ",tau=", tau, ",I=", I,
                                            ": exact ", exact.get_str(),
                                            " formula ", want.get_str()));
          }
        }
      }
    }
  }
  bool ok = privacy_bad == 0 && dist_bad[2] == 0 && dist_bad[3] == 0;
  Report(3, "QM closed form", Of(ok),
         absl::StrCat("privacy ", privacy_checked - privacy_bad, "/",
                      privacy_checked, " exact; distortion d=2 ",
                      dist_checked[2] - dist_bad[2], "/", dist_checked[2],
                      ", d=3 ", dist_checked[3] - dist_bad[3], "/",
                      dist_checked[3],
                      examples.empty() ? "" : "; e.g. ",
                      absl::StrJoin(examples, "; ")));
}

void Criterion4() {
  int frontier = 0, bad = 0, per_i_below = 0, rows_total = 0;
  std::vector<std::string> bad_list;
  for (int64_t tau : {50, 64, 100, 101, 250, 500, 1000}) {
    TabularScale sc = TabularScale::Matched(tau, 2);
    int64_t s = tau + 1;
    double budget = std::log2(static_cast<double>(s)) - 1e-9;
    auto rows = MechanismComparison(sc, budget);
    if (!rows.ok()) {
      ++bad;
      bad_list.push_back(std::string(rows.status().message()));
      continue;
    }
    for (const auto& row : *rows) {
      ++rows_total;
      // Recompute both sides from the formulas.
      int64_t c = (s + row.interval - 1) / row.interval;
      Rational r = Rational(c - 1) / Rational(s - c);
      Rational rr = Rational(1) / (2 * (1 + r));
      Rational qm = LocalQmDistortion(tau, 2, row.interval);
      rr.canonicalize();
      if (rr != row.rr_distortion || qm != row.qm_distortion) {
        ++bad;
        bad_list.push_back(absl::StrCat("tau=", tau, ",I=", row.interval,
                                        " library disagrees with formula"));
      }
      if (qm > 0 && rr < qm) ++per_i_below;
      if (!row.frontier) continue;
      ++frontier;
      if (rr < qm) {
        ++bad;
        bad_list.push_back(absl::StrCat("tau=", tau, ",I=", row.interval));
      }
    }
  }
  Report(4, "mechanism comparison", Of(bad == 0 && frontier > 0),
         absl::StrCat(frontier, " matched-privacy frontier points with tau>=50, ",
                      bad, " with ratio < 1 ", absl::StrJoin(bad_list, " "),
                      "; off-frontier intervals with ratio < 1: ", per_i_below,
                      "/", rows_total));
}

PolicyMatrix RandomPolicy(const std::vector<std::string>& ins, int m, Rng& rng,
                          const char* prefix) {
  return *PolicyMatrix::Create(
      ins, testing::Names(prefix, m),
      testing::RandomRows(static_cast<int>(ins.size()), m, rng));
}

void Criterion5() {
  Rng rng(505);
  int total = 0, bad = 0, adaptive = 0;
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.Uniform(4));
    auto ins = testing::Names("i", n);
    SecretPartition part = RandomPartition(n, 1 + static_cast<int>(rng.Uniform(n)), rng);
    int m1 = 2 + static_cast<int>(rng.Uniform(3));
    PolicyMatrix a = RandomPolicy(ins, m1, rng, "a");
    Rational ra = SmlBruteForce(a, part)->raw_sum;
    PolicyMatrix joint;
    Rational bound;
    if (t % 2 == 0) {
      PolicyMatrix b = RandomPolicy(ins, 2 + static_cast<int>(rng.Uniform(3)), rng, "b");
      joint = *Compose(a, b);
      bound = ra * SmlBruteForce(b, part)->raw_sum;
    } else {
      ++adaptive;
      int m2 = 2 + static_cast<int>(rng.Uniform(3));
      std::vector<PolicyMatrix> stages;
      Rational worst = 0;
      for (int j = 0; j < m1; ++j) {
        stages.push_back(RandomPolicy(ins, m2, rng, "b"));
        worst = std::max(worst, SmlBruteForce(stages.back(), part)->raw_sum);
      }
      joint = *ComposeAdaptive(a, stages);
      bound = ra * worst;
    }
    ++total;
    if (SmlBruteForce(joint, part)->raw_sum > bound) ++bad;
  }
  Report(5, "composition", Of(bad == 0),
         absl::StrCat(total, " pairs (", adaptive, " adaptive), ", bad,
                      " violations"));
}

void Criterion6() {
  Rng rng(606);
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.Uniform(4));
    auto ins = testing::Names("i", n);
    SecretPartition part = RandomPartition(n, 1 + static_cast<int>(rng.Uniform(n)), rng);
    int m = 2 + static_cast<int>(rng.Uniform(3));
    PolicyMatrix mech = RandomPolicy(ins, m, rng, "o");
    PolicyMatrix k = RandomPolicy(mech.outputs(), 1 + static_cast<int>(rng.Uniform(4)), rng, "k");
    PolicyMatrix post = *Postprocess(mech, k);
    if (SmlBruteForce(post, part)->raw_sum > SmlBruteForce(mech, part)->raw_sum) ++bad;
  }
  Report(6, "post-processing", Of(bad == 0),
         absl::StrCat("100 (mechanism, kernel) pairs, ", bad, " violations"));
}

void Criterion7() {
  int bad = 0;
  for (const auto& in : sandwich_pool) {
    double sml = LogOf(in.raw, LogBase::kBase2);
    Sandwich sw = SandwichBounds(in.policy, in.partition);
    double mel = MinEntropyLeakage(in.policy);
    int64_t biggest = 0;
    for (const auto& cls : in.partition.classes()) {
      biggest = std::max<int64_t>(biggest, cls.size());
    }
    double lower = mel - std::log2(static_cast<double>(biggest));
    if (lower > sml + 1e-9 || sml > mel + 1e-9 || sw.lower > sml + 1e-9 ||
        sml > sw.upper + 1e-9) {
      ++bad;
    }
  }
  Report(7, "sandwich bounds", Of(bad == 0 && !sandwich_pool.empty()),
         absl::StrCat(sandwich_pool.size(), " instances from criteria 1-3, ",
                      bad, " violations"));
}

void Criterion8() {
  int bad = 0;
  for (const auto& c : rr_cases) {
    LdpResult l = LdpParameter(c.policy, c.partition);
    double eps = std::log(ToDouble(c.e));
    double sml = LogOf(SmlBruteForce(c.policy, c.partition)->raw_sum,
                       LogBase::kNatural);
    if (l.infinite() || *l.max_ratio != c.e || sml > eps + 1e-12) ++bad;
  }
  Report(8, "L_DP relation", Of(bad == 0 && !rr_cases.empty()),
         absl::StrCat(rr_cases.size(), " RR instances, ", bad, " violations"));
}

double ExactSml(const PolicyMatrix& p, const SecretPartition& part, LogBase b) {
  return LogOf(SmlBruteForce(p, part)->raw_sum, b);
}

void Criterion9() {
  const double eps = 1e-9;
  int instances = 0, checks = 0, skipped = 0;
  int rr_lo = 0, rr_hi = 0, qm_lo = 0, qm_hi = 0, rr_gap = 0, qm_gap = 0;
  std::vector<std::string> qm_lo_list, other;
  for (int64_t tau = 1; tau <= 4; ++tau) {
    for (int64_t dstar = 1; dstar <= 4; ++dstar) {
      for (int64_t d0 = 1; d0 <= dstar; ++d0) {
        for (int64_t d1 = 0; d1 <= 2; ++d1) {
          TabularScale sc{tau, d0, d1, dstar, tau + 1};
          TabularScale truth{tau, dstar, 0, dstar, tau + 1};
          auto inst = BuildMismatchInstance(sc);
          auto base = BuildMismatchInstance(truth);
          if (!inst.ok() || !base.ok()) {
            ++skipped;
            continue;
          }
          ++instances;
          std::string tag = absl::StrCat("(tau=", tau, ",d*=", dstar, ",d0=",
                                         d0, ",d1=", d1);
          int64_t missed = dstar - d0;
          Rational cap = RrRobustExpEpsilonCap(tau, sc.d_hat(), sc.s);
          for (const Rational& e : std::vector<Rational>{cap, (cap + 1) / 2}) {
            auto b = RrMismatchBounds(sc, e);
            if (!b.ok()) {
              ++skipped;
              continue;
            }
            ++checks;
            double got = ExactSml(*MismatchedRrPolicy(*inst, e), inst->partition,
                                  LogBase::kNatural);
            double ref = ExactSml(*MismatchedRrPolicy(*base, e), base->partition,
                                  LogBase::kNatural);
            if (b->privacy_lo.Log(LogBase::kNatural) > got + eps) {
              ++rr_lo;
              other.push_back(tag + ",RR lo)");
            }
            if (got > b->privacy_hi.Log(LogBase::kNatural) + eps) {
              ++rr_hi;
              other.push_back(tag + ",RR hi)");
            }
            if (got - ref > std::log(3.0) * missed + eps) {
              ++rr_gap;
              other.push_back(tag + ",RR gap)");
            }
          }
          for (int64_t I = 1; I <= sc.s; ++I) {
            auto b = QmMismatchBounds(sc, I);
            if (!b.ok()) {
              ++skipped;
              continue;
            }
            ++checks;
            double got = ExactSml(*MismatchedQmPolicy(*inst, I), inst->partition,
                                  LogBase::kBase2);
            double ref = ExactSml(*MismatchedQmPolicy(*base, I), base->partition,
                                  LogBase::kBase2);
            if (b->privacy_lo.Log(LogBase::kBase2) > got + eps) {
              ++qm_lo;
              qm_lo_list.push_back(absl::StrCat(
                  tag, ",I=", I, ": lo ", b->privacy_lo.Log(LogBase::kBase2),
                  " > ", got, ")"));
            }
            if (got > b->privacy_hi.Log(LogBase::kBase2) + eps) {
              ++qm_hi;
              other.push_back(absl::StrCat(tag, ",I=", I, ",QM hi)"));
            }
            if (got - ref > 1.0 * missed + eps) {
              ++qm_gap;
              other.push_back(absl::StrCat(tag, ",I=", I, ",QM gap)"));
            }
          }
        }
      }
    }
  }
  bool ok = instances >= 50 && rr_lo + rr_hi + qm_lo + qm_hi + rr_gap + qm_gap == 0;
  std::string detail = absl::StrCat(
      instances, " instances, ", checks, " bound checks, ", skipped,
      " skipped; violations: RR lo ", rr_lo, ", RR hi ", rr_hi, ", QM lo ",
      qm_lo, ", QM hi ", qm_hi, ", RR gap ", rr_gap, ", QM gap ", qm_gap);
  if (!other.empty()) absl::StrAppend(&detail, "; ", absl::StrJoin(other, " "));
  Report(9, "mismatch bounds", Of(ok), detail);
  for (const auto& s : qm_lo_list) std::printf("    QM lower bound above exact SML %s\n", s.c_str());
}

// Pearson test of observed counts against expected probabilities. Cells with
// zero probability must stay empty.
bool ChiSquare(const std::vector<int64_t>& observed,
               const std::vector<double>& probs, int64_t n, double* p_out) {
  double stat = 0;
  int cells = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] == 0) {
      if (observed[i] != 0) return false;
      continue;
    }
    double e = probs[i] * n;
    stat += (observed[i] - e) * (observed[i] - e) / e;
    ++cells;
  }
  if (cells < 2) {
    *p_out = 1;
    return true;
  }
  boost::math::chi_squared dist(cells - 1);
  *p_out = boost::math::cdf(boost::math::complement(dist, stat));
  return *p_out > 1e-3;
}

bool SampleRow(const Mechanism& mech, const CategoricalParam& in,
               const std::vector<CategoricalParam>& outs, uint64_t seed,
               double* p) {
  const int64_t n = 100000;
  std::vector<double> probs;
  for (const auto& o : outs) probs.push_back(ToDouble(*mech.Likelihood(in, o)));
  std::vector<int64_t> counts(outs.size(), 0);
  Rng rng(seed);
  for (int64_t k = 0; k < n; ++k) {
    CategoricalParam o = *mech.Sample(in, rng);
    ++counts[mech.output_space().IndexOf(o)->get_ui()];
  }
  return ChiSquare(counts, probs, n, p);
}

void Criterion10() {
  ParameterSpace sp = ParameterSpace::Full(3, 4);
  auto outs = *sp.Members();
  double p_rr = 0, p_qm = 0, p_maxl = 0;
  bool rr = SampleRow(*RRMechanism::Create(sp, 3), CategoricalParam({2, 1, 1}),
                      outs, 1, &p_rr);
  auto qm = *QMMechanism::Create(sp, FractionSecret(0), FractionSecretValues(4),
                                 2, 0);
  bool q = SampleRow(qm, CategoricalParam({1, 2, 1}), outs, 2, &p_qm);
  // MaxL is deterministic, so the test runs on the output law of a uniform
  // input pushed through it.
  Rng cr(3);
  auto cands = BinCandidates(3, 4, 0, 2, cr);
  auto maxl = *BuildMaxL(sp.categories(), outs, cands);
  auto pol = *Materialize(maxl, outs);
  std::vector<double> probs(pol.num_outputs(), 0);
  for (int i = 0; i < pol.num_inputs(); ++i) {
    for (int j = 0; j < pol.num_outputs(); ++j) {
      probs[j] += ToDouble(pol.at(i, j)) / pol.num_inputs();
    }
  }
  std::vector<int64_t> counts(pol.num_outputs(), 0);
  Rng rng(4);
  const int64_t n = 100000;
  for (int64_t k = 0; k < n; ++k) {
    const auto& in = outs[rng.Uniform(outs.size())];
    ++counts[maxl.output_space().IndexOf(*maxl.Sample(in, rng))->get_ui()];
  }
  bool m = ChiSquare(counts, probs, n, &p_maxl);
  Report(10, "sampler fidelity", Of(rr && q && m),
         absl::StrCat("1e5 samples each; p-values RR ", p_rr, ", QM ", p_qm,
                      ", MaxL ", p_maxl));
}

void Criterion11() {
  const char* path = std::getenv("SML_CENSUS_CSV");
  if (path == nullptr || *path == '\0') {
    Report(11, "Census ingestion", Verdict::kSkip,
           "SML_CENSUS_CSV not set; the public file is not bundled");
    return;
  }
  std::vector<std::string> cols;
  if (const char* c = std::getenv("SML_CENSUS_COLUMNS"); c && *c) {
    cols = absl::StrSplit(c, ',');
  }
  IngestOptions opts;
  opts.missing_tokens.clear();
  auto r = IngestCsv(path, cols, opts);
  if (!r.ok()) {
    Report(11, "Census ingestion", Verdict::kFail, std::string(r.status().message()));
    return;
  }
  SupportSets sets = ExtractSupport(r->dataset);
  bool ok = r->dataset.n() == 48842 && sets.d() == 22381;
  Report(11, "Census ingestion", Of(ok),
         absl::StrCat("n=", r->dataset.n(), " (want 48842), d=", sets.d(),
                      " (want 22381); full-scale SML not computed"));
}

}  // namespace
}  // namespace statleak

int main() {
  using namespace statleak;
  Criterion1();
  Criterion2();
  Criterion3();
  Criterion4();
  Criterion5();
  Criterion6();
  Criterion7();
  Criterion8();
  Criterion9();
  Criterion10();
  Criterion11();
  std::printf("%d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
