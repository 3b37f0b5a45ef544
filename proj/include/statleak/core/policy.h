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

#ifndef STATLEAK_CORE_POLICY_H_
#define STATLEAK_CORE_POLICY_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "statleak/core/rational.h"

namespace statleak {

// An explicit release kernel P(out | in) with exact entries. Construction
// rejects any row that does not sum to exactly one.
class PolicyMatrix {
 public:
  PolicyMatrix() = default;

  static absl::StatusOr<PolicyMatrix> Create(
      std::vector<std::string> inputs, std::vector<std::string> outputs,
      std::vector<std::vector<Rational>> rows);
  static absl::StatusOr<PolicyMatrix> FromJson(const nlohmann::json& j);

  // Deterministic policy from a row -> column map.
  static absl::StatusOr<PolicyMatrix> FromMap(std::vector<std::string> inputs,
                                              std::vector<std::string> outputs,
                                              const std::vector<int>& map);

  int num_inputs() const { return static_cast<int>(inputs_.size()); }
  int num_outputs() const { return static_cast<int>(outputs_.size()); }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  const Rational& at(int i, int j) const { return rows_[i][j]; }
  const std::vector<Rational>& row(int i) const { return rows_[i]; }

  // Every entry is 0 or 1.
  bool deterministic() const { return deterministic_; }
  // Column of the unit entry per row; empty unless deterministic.
  std::vector<int> DeterministicMap() const;

  nlohmann::json ToJson() const;

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::vector<std::vector<Rational>> rows_;
  bool deterministic_ = false;
};

}  // namespace statleak

#endif  // STATLEAK_CORE_POLICY_H_
