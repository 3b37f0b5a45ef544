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

#include "statleak/mechanisms/combinators.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

absl::StatusOr<PolicyMatrix> Compose(const PolicyMatrix& first,
                                     const PolicyMatrix& second) {
  return ComposeAdaptive(
      first, std::vector<PolicyMatrix>(first.num_outputs(), second));
}

absl::StatusOr<PolicyMatrix> ComposeAdaptive(
    const PolicyMatrix& first, const std::vector<PolicyMatrix>& stages) {
  if (static_cast<int>(stages.size()) != first.num_outputs()) {
    return absl::InvalidArgumentError(
        "need one second stage per first-stage output");
  }
  for (const auto& st : stages) {
    if (st.inputs() != first.inputs()) {
      return absl::InvalidArgumentError("stage inputs differ from the first");
    }
    if (st.outputs() != stages[0].outputs()) {
      return absl::InvalidArgumentError("second stages disagree on outputs");
    }
  }
  std::vector<std::string> outputs;
  int n2 = stages.empty() ? 0 : stages[0].num_outputs();
  for (const auto& a : first.outputs()) {
    for (int b = 0; b < n2; ++b) {
      outputs.push_back(absl::StrCat(a, "|", stages[0].outputs()[b]));
    }
  }
  std::vector<std::vector<Rational>> rows(first.num_inputs());
  for (int i = 0; i < first.num_inputs(); ++i) {
    rows[i].reserve(outputs.size());
    for (int a = 0; a < first.num_outputs(); ++a) {
      for (int b = 0; b < n2; ++b) {
        rows[i].push_back(first.at(i, a) * stages[a].at(i, b));
      }
    }
  }
  return PolicyMatrix::Create(first.inputs(), std::move(outputs),
                              std::move(rows));
}

absl::StatusOr<PolicyMatrix> ComposeAll(const std::vector<PolicyMatrix>& mechs) {
  if (mechs.empty()) return absl::InvalidArgumentError("nothing to compose");
  PolicyMatrix acc = mechs[0];
  for (size_t k = 1; k < mechs.size(); ++k) {
    absl::StatusOr<PolicyMatrix> next = Compose(acc, mechs[k]);
    if (!next.ok()) return next.status();
    acc = *std::move(next);
  }
  return acc;
}

absl::StatusOr<PolicyMatrix> Postprocess(const PolicyMatrix& policy,
                                         const PolicyMatrix& kernel) {
  if (kernel.inputs() != policy.outputs()) {
    return absl::InvalidArgumentError(
        "kernel inputs must equal the policy outputs");
  }
  std::vector<std::vector<Rational>> rows(
      policy.num_inputs(),
      std::vector<Rational>(kernel.num_outputs(), Rational(0)));
  for (int i = 0; i < policy.num_inputs(); ++i) {
    for (int y = 0; y < policy.num_outputs(); ++y) {
      if (policy.at(i, y) == 0) continue;
      for (int z = 0; z < kernel.num_outputs(); ++z) {
        rows[i][z] += policy.at(i, y) * kernel.at(y, z);
      }
    }
  }
  return PolicyMatrix::Create(policy.inputs(), kernel.outputs(),
                              std::move(rows));
}

}  // namespace statleak
