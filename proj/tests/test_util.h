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


#ifndef STATLEAK_TESTS_TEST_UTIL_H_
#define STATLEAK_TESTS_TEST_UTIL_H_

#include <vector>

#include "oracles.h"
#include "statleak/core/param.h"
#include "statleak/core/policy.h"
#include "statleak/core/rng.h"
#include "statleak/core/secret.h"

namespace statleak::testing {

inline oracle::Matrix Rows(const PolicyMatrix& p) {
  oracle::Matrix m;
  for (int i = 0; i < p.num_inputs(); ++i) m.push_back(p.row(i));
  return m;
}

inline std::vector<oracle::Counts> CountsOf(
    const std::vector<CategoricalParam>& v) {
  std::vector<oracle::Counts> out;
  for (const auto& p : v) out.push_back(p.counts());
  return out;
}

inline std::vector<int> ClassOf(const SecretPartition& part) {
  std::vector<int> out;
  for (int i = 0; i < part.num_members(); ++i) out.push_back(part.class_of(i));
  return out;
}

// Random row-stochastic matrix with small denominators.
inline std::vector<std::vector<Rational>> RandomRows(int n, int m, Rng& rng,
                                                     int den = 6) {
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<int64_t> w(m);
    int64_t total = 0;
    for (auto& x : w) total += x = static_cast<int64_t>(rng.Uniform(den));
    if (total == 0) {
      w[rng.Uniform(m)] = 1;
      total = 1;
    }
    std::vector<Rational> row;
    for (int64_t x : w) row.push_back(MakeRational(x, total));
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<std::string> Names(const char* prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

}  // namespace statleak::testing

#endif  // STATLEAK_TESTS_TEST_UTIL_H_
