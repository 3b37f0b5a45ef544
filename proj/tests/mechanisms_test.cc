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


#include <map>

#include "gtest/gtest.h"
#include "oracles.h"
#include "statleak/core/mechanism.h"
#include "statleak/leakage/sml.h"
#include "statleak/mechanisms/combinators.h"
#include "statleak/mechanisms/maxl.h"
#include "statleak/mechanisms/qm.h"
#include "statleak/mechanisms/rr.h"
#include "statleak/mechanisms/support.h"
#include "test_util.h"

namespace statleak {
namespace {

using testing::ClassOf;
using testing::CountsOf;
using testing::Names;
using testing::Rows;

CategoricalParam P(std::vector<int64_t> c) { return CategoricalParam(c); }

Rational Raw(const PolicyMatrix& p, const SecretPartition& part) {
  return SmlBruteForce(p, part)->raw_sum;
}

TEST(RrTest, KernelExamples) {
  ParameterSpace sp = ParameterSpace::Full(2, 2);  // 3 outputs.
  auto in = *sp.Members();
  auto p = *Materialize(*RRMechanism::Create(sp, 3), in);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(p.at(i, j), i == j ? MakeRational(3, 5) : MakeRational(1, 5));
    }
  }
  auto u = *Materialize(*RRMechanism::Create(sp, 1), in);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(u.at(0, j), MakeRational(1, 3));
  auto id = *Materialize(RRMechanism::Infinite(sp), in);
  EXPECT_TRUE(id.deterministic());
  EXPECT_EQ(id.DeterministicMap(), (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(RRMechanism::Create(sp, MakeRational(1, 2)).ok());
  EXPECT_FALSE(RRMechanism::FromEpsilon(sp, -1).ok());
  EXPECT_FALSE(RRMechanism::Create(sp, 2)->Likelihood(P({3, 0}), P({2, 0})).ok());
}

TEST(RrTest, KernelMatchesOracleWithSupport) {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t tau = 1; tau <= 3; ++tau) {
      ParameterSpace sp = ParameterSpace::Full(d, tau);
      auto ins = *sp.Members();
      // Category d-1 is outside the estimate; an input may still use it.
      std::vector<bool> est(d, true);
      est[d - 1] = false;
      auto allowed = [&](const oracle::Counts& in, const oracle::Counts& o) {
        for (int i = 0; i < d; ++i) {
          if (o[i] > 0 && !est[i] && in[i] == 0) return false;
        }
        return true;
      };
      for (int e : {1, 2, 7}) {
        auto plain = *Materialize(*RRMechanism::Create(sp, e), ins);
        EXPECT_EQ(Rows(plain), oracle::RrKernel(CountsOf(ins), CountsOf(ins), e));
        auto sup = *Materialize(
            *RRMechanism::Create(sp, e, EstimatedSupport(est)), ins);
        EXPECT_EQ(Rows(sup), oracle::RrKernel(CountsOf(ins), CountsOf(ins), e,
                                              allowed));
      }
    }
  }
}

TEST(RrTest, OutputCountAndSampling) {
  ParameterSpace sp = ParameterSpace::Full(3, 4);
  auto rr = *RRMechanism::Create(sp, 4);
  EXPECT_EQ(*rr.OutputCount(P({4, 0, 0})), 15);
  Rng rng(11);
  std::map<std::vector<int64_t>, int> hist;
  const int n = 20000;
  for (int i = 0; i < n; ++i) ++hist[rr.Sample(P({2, 1, 1}), rng)->counts()];
  // Diagonal 4/18, others 1/18.
  EXPECT_NEAR(hist[(std::vector<int64_t>{2, 1, 1})] / double(n), 4.0 / 18, 0.015);
  EXPECT_NEAR(hist[(std::vector<int64_t>{0, 0, 4})] / double(n), 1.0 / 18, 0.008);
  // Huge spaces sample without enumeration.
  ParameterSpace big = ParameterSpace::Full(40, 1000);
  auto rb = *RRMechanism::Create(big, 2);
  std::vector<int64_t> c(40, 25);
  auto out = rb.Sample(P(c), rng);
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(big.Contains(*out));
}

QMMechanism FractionQm(int d, int64_t tau, int64_t I, bool fast,
                       OutputSupport sup = {}) {
  return *QMMechanism::Create(ParameterSpace::Full(d, tau), FractionSecret(0),
                              FractionSecretValues(tau), I,
                              fast ? std::optional<int>(0) : std::nullopt,
                              std::move(sup));
}

TEST(QmTest, Representatives) {
  auto qm = FractionQm(2, 4, 2, true);  // s = 5.
  EXPECT_EQ(qm.num_bins(), 3);
  EXPECT_EQ(qm.RepresentativeRank(1), 4);
  EXPECT_EQ(qm.RepresentativeRank(2), 5);  // Clamped.
  auto one = FractionQm(2, 4, 5, true);
  EXPECT_EQ(one.RepresentativeRank(0), 5 / 2 + 1);
  // Input with secret rank 4 (count 3) sits in bin 1 and is released with
  // rank 4.
  Rng rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(qm.Sample(P({3, 1}), rng)->count(0), 3);
}

TEST(QmTest, IntervalOneKeepsSecret) {
  auto qm = FractionQm(3, 3, 1, true);
  Rng rng(2);
  auto ins = *EnumerateParams(3, 3);
  for (const auto& in : ins) {
    for (int k = 0; k < 5; ++k) {
      EXPECT_EQ(qm.Sample(in, rng)->count(0), in.count(0));
    }
  }
}

TEST(QmTest, KernelMatchesOracleBothPaths) {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t tau = 1; tau <= 4; ++tau) {
      auto ins = *EnumerateParams(d, tau);
      for (int64_t I = 1; I <= tau + 1; ++I) {
        auto fast = *Materialize(FractionQm(d, tau, I, true), ins);
        auto slow = *Materialize(FractionQm(d, tau, I, false), ins);
        auto ref = oracle::QmKernel(CountsOf(ins), CountsOf(ins), tau, I);
        EXPECT_EQ(Rows(fast), ref) << d << " " << tau << " " << I;
        EXPECT_EQ(Rows(slow), ref);
      }
    }
  }
}

TEST(QmTest, EmptyReleaseSetIsAnError) {
  // Category 0 lies outside the estimate. With I = 2 the input (0,2) is in
  // bin 0 whose representative has one record in category 0, which that
  // input may not release.
  std::vector<bool> est = {false, true};
  auto qm = FractionQm(2, 2, 2, true, EstimatedSupport(est));
  auto lk = qm.Likelihood(P({0, 2}), P({1, 1}));
  EXPECT_FALSE(lk.ok());
  EXPECT_NE(lk.status().message().find("empty release set"), std::string::npos);
  EXPECT_EQ(*qm.Likelihood(P({1, 1}), P({1, 1})), 1);
  auto unordered = QMMechanism::Create(
      ParameterSpace::Full(2, 2), IdentitySecret(),
      {SecretValue{"(0,2)/2", {}}, SecretValue{"(1,1)/2", {}},
       SecretValue{"(2,0)/2", {}}},
      2);
  ASSERT_TRUE(unordered.ok());
  EXPECT_FALSE(unordered->ordered());
  // Bin 0 = first two secrets, released uniformly over both.
  EXPECT_EQ(*unordered->Likelihood(P({0, 2}), P({1, 1})), MakeRational(1, 2));
  EXPECT_EQ(*unordered->Likelihood(P({2, 0}), P({2, 0})), 1);
}

TEST(QmTest, SupportRestrictedKernel) {
  const int d = 3;
  for (int64_t tau = 1; tau <= 3; ++tau) {
    auto ins = *EnumerateParams(d, tau);
    std::vector<bool> est = {true, true, false};
    auto allowed = [&](const oracle::Counts& in, const oracle::Counts& o) {
      return !(o[2] > 0 && in[2] == 0);
    };
    for (int64_t I = 1; I <= tau + 1; ++I) {
      auto qm = FractionQm(d, tau, I, true, EstimatedSupport(est));
      auto p = Materialize(qm, ins);
      ASSERT_TRUE(p.ok()) << p.status();
      EXPECT_EQ(Rows(*p),
                oracle::QmKernel(CountsOf(ins), CountsOf(ins), tau, I, allowed));
    }
  }
}

TEST(MaxLTest, AllCandidatesGiveIdentity) {
  auto ins = *EnumerateParams(2, 3);
  auto r = MaxLGreedy(ins, ins);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->worst_cost, 0);
  for (size_t i = 0; i < ins.size(); ++i) {
    EXPECT_EQ(ins[r->assignment[i]], ins[i]);
  }
}

TEST(MaxLTest, SingleCandidateIsConstant) {
  auto ins = *EnumerateParams(3, 2);
  auto r = *MaxLGreedy(ins, {P({2, 0, 0})});
  Rational worst = 0;
  for (const auto& in : ins) worst = std::max(worst, TvDistance(in, P({2, 0, 0})));
  EXPECT_EQ(r.worst_cost, worst);
  auto m = *BuildMaxL({"a", "b", "c"}, ins, {P({2, 0, 0})});
  auto pol = *Materialize(m, ins);
  EXPECT_TRUE(pol.deterministic());
  EXPECT_EQ(pol.num_outputs(), 1);
}

TEST(MaxLTest, BinCandidatesMatchSubsetOracle) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    auto cands = BinCandidates(2, 4, 0, 2, rng);  // s = 5, I = 2.
    ASSERT_EQ(cands.size(), 3u);
    for (size_t k = 0; k < cands.size(); ++k) {
      int64_t v = cands[k].count(0);
      EXPECT_GE(v, static_cast<int64_t>(2 * k));
      EXPECT_LT(v, static_cast<int64_t>(2 * k + 2));
    }
    auto ins = *EnumerateParams(2, 4);
    auto r = *MaxLGreedy(ins, cands);
    EXPECT_EQ(r.worst_cost, oracle::MinMaxSubset(CountsOf(ins), CountsOf(cands), 4));
  }
}

TEST(MaxLTest, GreedyMeetsSubsetOracleOnRandomCandidates) {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 2 + static_cast<int>(rng.Uniform(2));
    int64_t tau = 2 + static_cast<int64_t>(rng.Uniform(2));
    auto ins = *EnumerateParams(d, tau);
    std::vector<CategoricalParam> cands;
    int k = 1 + static_cast<int>(rng.Uniform(6));
    for (int i = 0; i < k; ++i) cands.push_back(ins[rng.Uniform(ins.size())]);
    auto r = *MaxLGreedy(ins, cands);
    EXPECT_EQ(r.worst_cost,
              oracle::MinMaxSubset(CountsOf(ins), CountsOf(cands), tau));
    for (size_t i = 0; i < ins.size(); ++i) {
      // Each input goes to its nearest selected candidate.
      Rational mine = TvDistance(ins[i], cands[r.assignment[i]]);
      for (int s : r.selected) EXPECT_LE(mine, TvDistance(ins[i], cands[s]));
    }
  }
}

TEST(CombinatorsTest, PostprocessIdentityKernel) {
  ParameterSpace sp = ParameterSpace::Full(2, 2);
  auto ins = *sp.Members();
  auto rr = *Materialize(*RRMechanism::Create(sp, 3), ins);
  auto k = *PolicyMatrix::FromMap(rr.outputs(), rr.outputs(), {0, 1, 2});
  auto pp = Postprocess(rr, k);
  ASSERT_TRUE(pp.ok());
  EXPECT_EQ(Rows(*pp), Rows(rr));
  auto bad = *PolicyMatrix::FromMap({"z"}, {"z"}, {0});
  EXPECT_FALSE(Postprocess(rr, bad).ok());
}

TEST(CombinatorsTest, ComposeWithConstantKeepsLeakage) {
  ParameterSpace sp = ParameterSpace::Full(2, 3);
  auto ins = *sp.Members();
  auto part = *BuildPartition(ins, FractionSecret(0));
  auto rr = *Materialize(*RRMechanism::Create(sp, 4), ins);
  auto cst = *Materialize(ConstantMechanism(sp, P({3, 0})), ins);
  auto joint = Compose(rr, cst);
  ASSERT_TRUE(joint.ok());
  EXPECT_EQ(Raw(*joint, part), Raw(rr, part));
  EXPECT_NE(joint->outputs()[0].find('|'), std::string::npos);
}

TEST(CombinatorsTest, ComposeRrTwice) {
  ParameterSpace sp = ParameterSpace::Full(2, 2);
  auto ins = *sp.Members();
  auto part = *BuildPartition(ins, FractionSecret(0));
  auto rr = *Materialize(*RRMechanism::Create(sp, 2), ins);
  auto joint = *Compose(rr, rr);
  Rational one = Raw(rr, part);
  EXPECT_LE(Raw(joint, part), one * one);
}

TEST(CombinatorsTest, AdaptiveStagesMustAlign) {
  ParameterSpace sp = ParameterSpace::Full(2, 2);
  auto ins = *sp.Members();
  auto first = *Materialize(*RRMechanism::Create(sp, 2), ins);
  auto a = *Materialize(*RRMechanism::Create(sp, 3), ins);
  auto b = *Materialize(IdentityMechanism(sp), ins);
  auto c = ComposeAdaptive(first, {a, b, a});
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->num_outputs(), 9);
  EXPECT_FALSE(ComposeAdaptive(first, {a, b}).ok());
  // Row i of the joint kernel is P1(j|i) P2_j(k|i).
  EXPECT_EQ(c->at(0, 3 * 1 + 1), first.at(0, 1) * b.at(0, 1));
}

TEST(CombinatorsTest, ComposeAllMatchesPairwise) {
  ParameterSpace sp = ParameterSpace::Full(2, 1);
  auto ins = *sp.Members();
  auto a = *Materialize(*RRMechanism::Create(sp, 2), ins);
  auto b = *Materialize(*RRMechanism::Create(sp, 3), ins);
  auto all = *ComposeAll({a, b, a});
  auto pair = *Compose(*Compose(a, b), a);
  EXPECT_EQ(Rows(all), Rows(pair));
}

}  // namespace
}  // namespace statleak
