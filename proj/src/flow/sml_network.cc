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

#include "statleak/flow/sml_network.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace statleak {

absl::StatusOr<SmlNetwork> BuildSmlNetwork(const PolicyMatrix& policy,
                                           const SecretPartition& partition) {
  if (!policy.deterministic()) {
    return absl::InvalidArgumentError(
        "the flow reduction needs a deterministic policy");
  }
  if (partition.num_members() != policy.num_inputs()) {
    return absl::InvalidArgumentError(
        "partition and policy disagree on the number of inputs");
  }
  SmlNetwork s;
  FlowNetwork& net = s.net;
  net.set_source(net.AddNode("source"));
  for (const auto& g : partition.secrets()) {
    s.secret_nodes.push_back(net.AddNode(absl::StrCat("g:", g.id)));
  }
  for (const auto& in : policy.inputs()) {
    s.input_nodes.push_back(net.AddNode(absl::StrCat("in:", in)));
  }
  for (const auto& out : policy.outputs()) {
    s.output_nodes.push_back(net.AddNode(absl::StrCat("out:", out)));
  }
  net.set_sink(net.AddNode("sink"));

  for (int g : s.secret_nodes) net.AddArc(net.source(), g, 1, 0);
  s.membership_arcs.assign(policy.num_inputs(), -1);
  for (int k = 0; k < partition.s(); ++k) {
    for (int i : partition.classes()[k]) {
      s.membership_arcs[i] =
          net.AddArc(s.secret_nodes[k], s.input_nodes[i], 1, 0);
    }
  }
  for (int i = 0; i < policy.num_inputs(); ++i) {
    for (int j = 0; j < policy.num_outputs(); ++j) {
      net.AddArc(s.input_nodes[i], s.output_nodes[j], 1, -policy.at(i, j));
    }
  }
  for (int o : s.output_nodes) net.AddArc(o, net.sink(), 1, 0);
  return s;
}

}  // namespace statleak
