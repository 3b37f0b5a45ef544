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


#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"
#include "statleak/core/mechanism.h"
#include "statleak/leakage/sml.h"
#include "statleak/mechanisms/qm.h"
#include "statleak/mechanisms/rr.h"
#include "statleak/tradeoff/closed_form.h"
#include "statleak/tradeoff/distortion.h"
#include "statleak/tradeoff/mismatch.h"
#include "statleak/tradeoff/sweep.h"
#include "test_util.h"

namespace statleak {
namespace {

using testing::CountsOf;
using testing::Rows;

TEST(ClosedFormTest, RrPlugIn) {
  TabularScale sc = TabularScale::Matched(10, 2);
  EXPECT_EQ(sc.s, 11);
  EXPECT_EQ(RrR(10, 2, 12), 1);
  EXPECT_EQ(RrPrivacyRaw(sc, 12), 6);
  EXPECT_NEAR(RrPrivacyClosed(sc, 12), std::log2(6.0), 1e-12);
  EXPECT_EQ(RrDistortionClosed(sc, 12), MakeRational(1, 4));
  // e^eps = 1 is uniform output.
  EXPECT_EQ(RrPrivacyRaw(sc, 1), 1);
  EXPECT_EQ(RrDistortionClosed(sc, 1), MakeRational(1, 2));
  EXPECT_EQ(RrDistortionClosed(TabularScale::Matched(4, 1), 3), 0);
}

TEST(ClosedFormTest, QmPlugIn) {
  EXPECT_EQ(QmPrivacyRaw(7, 3), 3);
  EXPECT_NEAR(QmPrivacyClosed(7, 3), std::log2(3.0), 1e-12);
  EXPECT_EQ(*QmDistortionClosed(TabularScale::Matched(10, 2), 3),
            MakeRational(1, 10));
  // I = 1: (d-2)/(2(d-1)).
  EXPECT_EQ(*QmDistortionClosed(TabularScale::Matched(6, 3), 1),
            MakeRational(1, 4));
  EXPECT_FALSE(QmDistortionClosed(TabularScale::Matched(6, 1), 2).ok());
}

TEST(ClosedFormTest, AgreesWithEnumeration) {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t tau = 1; tau <= 5; ++tau) {
      TabularScale sc = TabularScale::Matched(tau, d);
      ParameterSpace sp = ParameterSpace::Full(d, tau);
      auto ins = *sp.Members();
      auto vals = FractionSecretValues(tau);
      auto part = *BuildPartition(ins, FractionSecret(0), &vals);
      auto cls = testing::ClassOf(part);
      for (int e : {1, 2, 3, 12}) {
        auto pol = *Materialize(*RRMechanism::Create(sp, e), ins);
        EXPECT_EQ(oracle::SmlRaw(Rows(pol), cls), RrPrivacyRaw(sc, e));
        EXPECT_EQ(DistortionExact(pol, ins, ins)->value,
                  RrDistortionClosed(sc, e));
      }
      for (int64_t I = 1; I <= tau + 1; ++I) {
        auto qm = *QMMechanism::Create(sp, FractionSecret(0),
                                       FractionSecretValues(tau), I, 0);
        auto pol = *Materialize(qm, ins);
        EXPECT_EQ(SmlBruteForce(pol, part)->raw_sum, QmPrivacyRaw(tau + 1, I));
        Rational exact = DistortionExact(pol, ins, ins)->value;
        // Exact with two categories. With three the formula undercounts
        // mass moved between non-secret categories and sits below the
        // enumerated worst case.
        if (d == 2) {
          EXPECT_EQ(exact, *QmDistortionClosed(sc, I)) << tau << " " << I;
        } else {
          EXPECT_LE(*QmDistortionClosed(sc, I), exact) << tau << " " << I;
        }
      }
    }
  }
}

TEST(ClosedFormTest, RFromPrivacyInvertsRr) {
  TabularScale sc = TabularScale::Matched(8, 2);
  for (int c = 1; c <= 8; ++c) {
    auto r = RFromPrivacyRaw(9, c);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ((1 + 9 * *r) / (1 + *r), c);
  }
  EXPECT_FALSE(RFromPrivacyRaw(9, 9).ok());  // Needs r = infinity.
  (void)sc;
}

TEST(ComparisonTest, TrivialBudgetRejected) {
  TabularScale sc = TabularScale::Matched(50, 2);
  EXPECT_FALSE(MechanismComparison(sc, std::log2(51.0)).ok());
  EXPECT_FALSE(MechanismComparison(sc, 10).ok());
}

TEST(ComparisonTest, TauFiftyIntervalFive) {
  TabularScale sc = TabularScale::Matched(50, 2);
  auto rows = *MechanismComparison(sc, 5.0);
  bool seen = false;
  for (const auto& row : rows) {
    EXPECT_LE(LogOf(row.level, LogBase::kBase2), 5.0 + 1e-12);
    if (row.interval != 5) continue;
    seen = true;
    EXPECT_EQ(row.level, 11);
    ASSERT_TRUE(row.ratio.has_value());
    EXPECT_GE(*row.ratio, 1);
    // Both sides independently from the formulas.
    Rational r = *RFromPrivacyRaw(51, 11);
    EXPECT_EQ(row.rr_distortion, RrDistortionAtR(sc, r));
    EXPECT_EQ(row.qm_distortion, *QmDistortionClosed(sc, 5));
  }
  EXPECT_TRUE(seen);
}

TEST(ComparisonTest, FrontierDominates) {
  for (int64_t tau : {50, 100, 400}) {
    TabularScale sc = TabularScale::Matched(tau, 2);
    auto rows = *MechanismComparison(sc, std::log2(double(tau + 1)) - 1e-6);
    for (const auto& row : rows) {
      if (!row.frontier) continue;
      EXPECT_LE(row.qm_distortion, row.rr_distortion) << tau << " " << row.interval;
    }
  }
}

TEST(MismatchTest, RobustCap) {
  EXPECT_EQ(RrRobustExpEpsilonCap(1, 2, 2), 2);
  EXPECT_NEAR(RrRobustEpsilonCap(1, 2, 2), std::log(2.0), 1e-12);
  EXPECT_NEAR(RrRobustEpsilonCap(10, 2, 11), std::log(2.0), 1e-12);
  double prev = 0;
  for (int64_t tau = 1; tau <= 30; ++tau) {
    double c = RrRobustEpsilonCap(tau, 3, 5);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(MismatchTest, DecayThreshold) {
  EXPECT_EQ(QmDecayThreshold(9, 1, 8, 2), 0);
  double a = QmDecayThreshold(9, 9, 8, 2);
  EXPECT_NEAR(a, std::log(9.0) / std::log(1 + 8.0 / 10), 1e-9);
  double b = QmDecayThreshold(17, 4, 1000, 500);
  EXPECT_NEAR(b, (std::log(17.0) - std::log(5.0)) / std::log(1 + 1000.0 / 1500),
              1e-9);
}

TEST(MismatchTest, NoMismatchCollapses) {
  TabularScale sc = TabularScale::Matched(6, 3);
  auto b = *RrMismatchBounds(sc, 3);
  double closed = RrPrivacyClosed(sc, 3);
  EXPECT_LE(b.privacy_lo.Log(LogBase::kBase2), closed + 1e-9);
  EXPECT_GE(b.privacy_hi.Log(LogBase::kBase2), closed - 1e-9);
  EXPECT_NEAR(b.privacy_hi.Log(LogBase::kBase2), closed, 1e-9);
}

TEST(MismatchTest, BoundsBracketSmallRrInstance) {
  TabularScale sc;
  sc.tau = 3;
  sc.d_star = 3;
  sc.d_hat0 = 2;
  sc.d_hat1 = 1;
  sc.s = 4;
  ASSERT_TRUE(sc.Validate().ok());
  auto inst = BuildMismatchInstance(sc);
  ASSERT_TRUE(inst.ok()) << inst.status();
  Rational e = RrRobustExpEpsilonCap(sc.tau, sc.d_hat(), sc.s);
  auto pol = MismatchedRrPolicy(*inst, e);
  ASSERT_TRUE(pol.ok()) << pol.status();
  double sml = LogOf(SmlBruteForce(*pol, inst->partition)->raw_sum,
                     LogBase::kBase2);
  auto b = *RrMismatchBounds(sc, e);
  EXPECT_LE(b.privacy_lo.Log(LogBase::kBase2), sml + 1e-9);
  EXPECT_GE(b.privacy_hi.Log(LogBase::kBase2), sml - 1e-9);
  EXPECT_GE(b.lo_branch, 1);
  EXPECT_LE(b.lo_branch, 3);
  EXPECT_LE(b.distortion_lo, b.distortion_hi);
}

TEST(DistortionTest, ExactMatchesOracleAndRange) {
  ParameterSpace sp = ParameterSpace::Full(3, 3);
  auto ins = *sp.Members();
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto rows = testing::RandomRows(ins.size(), ins.size(), rng);
    auto pol = *PolicyMatrix::Create(Labels(ins), Labels(ins), rows);
    auto got = *DistortionExact(pol, ins, ins);
    EXPECT_EQ(got.value, oracle::Distortion(Rows(pol), CountsOf(ins),
                                            CountsOf(ins), 3));
    EXPECT_GE(got.value, 0);
    EXPECT_LE(got.value, 1);
  }
  auto id = *Materialize(IdentityMechanism(sp), ins);
  EXPECT_EQ(DistortionExact(id, ins, ins)->value, 0);
  CategoricalParam p0({3, 0, 0});
  auto cst = *Materialize(ConstantMechanism(sp, p0), ins);
  EXPECT_EQ(DistortionExact(cst, ins, ins)->value, 1);
}

TEST(DistortionTest, RrWorstInputIsPointMass) {
  for (int d = 2; d <= 3; ++d) {
    ParameterSpace sp = ParameterSpace::Full(d, 4);
    auto ins = *sp.Members();
    auto pol = *Materialize(*RRMechanism::Create(sp, 3), ins);
    auto got = *DistortionExact(pol, ins, ins);
    bool unit = false;
    for (int c = 0; c < d; ++c) unit |= ins[got.argmax].count(c) == 4;
    EXPECT_TRUE(unit);
  }
}

TEST(DistortionTest, MonteCarloNearExact) {
  ParameterSpace sp = ParameterSpace::Full(2, 3);
  auto rr = *RRMechanism::Create(sp, 3);
  Rng rng(9);
  auto mc = DistortionMc(rr, {CategoricalParam({3, 0})}, 20000, rng);
  ASSERT_TRUE(mc.ok());
  double exact = ToDouble(RrDistortionClosed(TabularScale::Matched(3, 2), 3));
  EXPECT_NEAR(mc->estimate, exact, 5 * mc->stderr_of_mean + 1e-9);
  EXPECT_FALSE(DistortionMc(rr, {}, 10, rng).ok());
}

TEST(SweepTest, RrEpsilonZero) {
  auto pts = *TradeoffSweep("rr", TabularScale::Matched(6, 2), {0});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(*pts[0].privacy, 0);
  EXPECT_DOUBLE_EQ(*pts[0].distortion, 0.5);
  EXPECT_EQ(pts[0].method, "closed_form");
}

TEST(SweepTest, QmPrivacyNonIncreasing) {
  std::vector<double> grid;
  for (int I = 1; I <= 7; ++I) grid.push_back(I);
  auto pts = *TradeoffSweep("qm", TabularScale::Matched(6, 2), grid);
  for (size_t i = 0; i < pts.size(); ++i) {
    EXPECT_NEAR(*pts[i].privacy,
                std::log2(std::ceil(7.0 / grid[i])), 1e-12);
    if (i) EXPECT_LE(*pts[i].privacy, *pts[i - 1].privacy);
  }
}

TEST(SweepTest, QmBelowRrAtMatchedPrivacy) {
  TabularScale sc = TabularScale::Matched(6, 2);
  // Curves are compared at each privacy level QM reaches, using the
  // smallest I that reaches it.
  int checked = 0;
  for (int I = 2; I <= 7; ++I) {
    int c = (7 + I - 1) / I;
    if (I > 1 && (7 + I - 2) / (I - 1) == c) continue;
    Rational r = *RFromPrivacyRaw(7, c);
    EXPECT_LE(*QmDistortionClosed(sc, I), RrDistortionAtR(sc, r)) << I;
    ++checked;
  }
  EXPECT_EQ(checked, 4);  // Levels 4, 3, 2, 1 at I = 2, 3, 4, 7.
}

TEST(SweepTest, MismatchRowsCarryOrderedBounds) {
  TabularScale sc;
  sc.tau = 3;
  sc.d_star = 3;
  sc.d_hat0 = 2;
  sc.d_hat1 = 1;
  sc.s = 4;
  SweepOptions opts;
  opts.jobs = 2;
  auto rr = *TradeoffSweep("rr", sc, {0.5, 1.0}, opts);
  auto qm = *TradeoffSweep("qm", sc, {1, 2, 4}, opts);
  for (const auto* v : {&rr, &qm}) {
    for (const auto& p : *v) {
      ASSERT_TRUE(p.ok()) << p.error;
      EXPECT_LE(*p.privacy_lo, *p.privacy_hi + 1e-12);
      EXPECT_LE(*p.distortion_lo, *p.distortion_hi + 1e-12);
    }
  }
  opts.jobs = 1;
  EXPECT_EQ(SweepToCsv(*TradeoffSweep("rr", sc, {0.5, 1.0}, opts)),
            SweepToCsv(rr));
}

TEST(SweepTest, MaxLAndErrors) {
  auto pts = *TradeoffSweep("maxl", TabularScale::Matched(4, 2), {1, 2, 5});
  for (const auto& p : pts) ASSERT_TRUE(p.ok()) << p.error;
  EXPECT_EQ(*pts[0].distortion, 0);
  EXPECT_FALSE(TradeoffSweep("nope", TabularScale::Matched(4, 2), {1}).ok());
  EXPECT_FALSE(TradeoffSweep("rr", TabularScale::Matched(4, 2), {}).ok());
  std::string csv = SweepToCsv(pts);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "mechanism,hyperparam,privacy,privacy_lo,privacy_hi,distortion,"
            "distortion_lo,distortion_hi,method,error");
}

TEST(SweepTest, QmThreeCategoriesEnumerates) {
  TabularScale sc = TabularScale::Matched(3, 3);
  auto pts = *TradeoffSweep("qm", sc, {1, 2});
  ParameterSpace sp = ParameterSpace::Full(3, 3);
  auto ins = *sp.Members();
  for (size_t k = 0; k < pts.size(); ++k) {
    ASSERT_TRUE(pts[k].ok()) << pts[k].error;
    EXPECT_EQ(pts[k].method, "exact_enum");
    auto qm = *QMMechanism::Create(sp, FractionSecret(0),
                                   FractionSecretValues(3), k + 1, 0);
    auto pol = *Materialize(qm, ins);
    EXPECT_DOUBLE_EQ(*pts[k].distortion,
                     ToDouble(DistortionExact(pol, ins, ins)->value));
    EXPECT_NEAR(*pts[k].privacy, QmPrivacyClosed(4, k + 1), 1e-12);
  }
}

}  // namespace
}  // namespace statleak
