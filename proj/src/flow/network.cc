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

#include "statleak/flow/network.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"

namespace statleak {

int FlowNetwork::AddNode(std::string name) {
  names_.push_back(std::move(name));
  return num_nodes() - 1;
}

int FlowNetwork::AddArc(int tail, int head, int64_t capacity, Rational cost) {
  arcs_.push_back({tail, head, capacity, std::move(cost)});
  return static_cast<int>(arcs_.size()) - 1;
}

absl::Status FlowNetwork::Validate() const {
  int n = num_nodes();
  if (source_ < 0 || source_ >= n || sink_ < 0 || sink_ >= n) {
    return absl::InvalidArgumentError("source or sink not set");
  }
  if (source_ == sink_) {
    return absl::InvalidArgumentError("source and sink coincide");
  }
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      return absl::InvalidArgumentError("arc endpoint out of range");
    }
    if (a.capacity < 0) {
      return absl::InvalidArgumentError("negative capacity");
    }
    if (a.head == source_) {
      return absl::InvalidArgumentError("arc enters the source");
    }
    if (a.tail == sink_) {
      return absl::InvalidArgumentError("arc leaves the sink");
    }
  }
  return absl::OkStatus();
}

std::string FlowNetwork::ToDot() const {
  auto q = [](const std::string& s) {
    return absl::StrCat("\"", absl::StrReplaceAll(s, {{"\"", "\\\""}}), "\"");
  };
  std::string out = "digraph sml {\n  rankdir=LR;\n";
  for (int v = 0; v < num_nodes(); ++v) {
    absl::StrAppend(&out, "  n", v, " [label=", q(names_[v]), "];\n");
  }
  for (const Arc& a : arcs_) {
    absl::StrAppend(&out, "  n", a.tail, " -> n", a.head, " [label=\"",
                    a.capacity, " (", a.cost.get_str(), ")\"];\n");
  }
  out += "}\n";
  return out;
}

}  // namespace statleak
