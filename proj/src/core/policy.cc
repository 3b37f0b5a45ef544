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

#include "statleak/core/policy.h"

#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

namespace {

absl::Status CheckDistinct(const std::vector<std::string>& labels,
                           const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate ", what, " label '", l, "'"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<PolicyMatrix> PolicyMatrix::Create(
    std::vector<std::string> inputs, std::vector<std::string> outputs,
    std::vector<std::vector<Rational>> rows) {
  if (absl::Status s = CheckDistinct(inputs, "input"); !s.ok()) return s;
  if (absl::Status s = CheckDistinct(outputs, "output"); !s.ok()) return s;
  if (rows.size() != inputs.size()) {
    return absl::InvalidArgumentError("row count differs from input count");
  }
  bool det = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != outputs.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has the wrong length"));
    }
    Rational sum = 0;
    for (Rational& p : rows[i]) {
      p.canonicalize();
      if (p < 0 || p > 1) {
        return absl::InvalidArgumentError(
            absl::StrCat("entry ", FormatRational(p), " outside [0,1]"));
      }
      if (p != 0 && p != 1) det = false;
      sum += p;
    }
    if (sum != 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "row '", inputs[i], "' sums to ", FormatRational(sum)));
    }
  }
  PolicyMatrix m;
  m.inputs_ = std::move(inputs);
  m.outputs_ = std::move(outputs);
  m.rows_ = std::move(rows);
  m.deterministic_ = det;
  return m;
}

absl::StatusOr<PolicyMatrix> PolicyMatrix::FromMap(
    std::vector<std::string> inputs, std::vector<std::string> outputs,
    const std::vector<int>& map) {
  if (map.size() != inputs.size()) {
    return absl::InvalidArgumentError("map length differs from input count");
  }
  std::vector<std::vector<Rational>> rows(
      inputs.size(), std::vector<Rational>(outputs.size(), Rational(0)));
  for (size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || map[i] >= static_cast<int>(outputs.size())) {
      return absl::InvalidArgumentError("map target out of range");
    }
    rows[i][map[i]] = 1;
  }
  return Create(std::move(inputs), std::move(outputs), std::move(rows));
}

absl::StatusOr<PolicyMatrix> PolicyMatrix::FromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("inputs") || !j.contains("outputs") ||
      !j.contains("rows")) {
    return absl::InvalidArgumentError(
        "policy JSON needs inputs, outputs and rows");
  }
  auto labels = [](const nlohmann::json& arr,
                   std::vector<std::string>* out) -> absl::Status {
    if (!arr.is_array()) return absl::InvalidArgumentError("expected array");
    for (const auto& v : arr) {
      out->push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return absl::OkStatus();
  };
  std::vector<std::string> inputs, outputs;
  if (absl::Status s = labels(j["inputs"], &inputs); !s.ok()) return s;
  if (absl::Status s = labels(j["outputs"], &outputs); !s.ok()) return s;
  if (!j["rows"].is_array()) return absl::InvalidArgumentError("bad rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) return absl::InvalidArgumentError("bad row");
    std::vector<Rational> row;
    for (const auto& e : r) {
      absl::StatusOr<Rational> q =
          e.is_string() ? ParseRational(e.get<std::string>())
          : e.is_number_integer()
              ? absl::StatusOr<Rational>(MakeRational(e.get<int64_t>()))
              : absl::StatusOr<Rational>(absl::InvalidArgumentError(
                    "entries must be \"num/den\" strings"));
      if (!q.ok()) return q.status();
      row.push_back(*std::move(q));
    }
    rows.push_back(std::move(row));
  }
  return Create(std::move(inputs), std::move(outputs), std::move(rows));
}

std::vector<int> PolicyMatrix::DeterministicMap() const {
  std::vector<int> map;
  if (!deterministic_) return map;
  for (const auto& r : rows_) {
    for (int j = 0; j < static_cast<int>(r.size()); ++j) {
      if (r[j] == 1) {
        map.push_back(j);
        break;
      }
    }
  }
  return map;
}

nlohmann::json PolicyMatrix::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& p : r) row.push_back(FormatRational(p));
    rows.push_back(std::move(row));
  }
  return {{"inputs", inputs_}, {"outputs", outputs_}, {"rows", rows}};
}

}  // namespace statleak
