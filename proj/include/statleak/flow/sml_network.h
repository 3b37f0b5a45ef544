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

#ifndef STATLEAK_FLOW_SML_NETWORK_H_
#define STATLEAK_FLOW_SML_NETWORK_H_

#include <vector>

#include "absl/status/statusor.h"
#include "statleak/core/policy.h"
#include "statleak/core/secret.h"
#include "statleak/flow/network.h"

namespace statleak {

// Four columns between source and sink: secrets, inputs, outputs. Every arc
// has capacity 1; input -> output arcs cost -P(out | in), all others 0.
struct SmlNetwork {
  FlowNetwork net;
  std::vector<int> secret_nodes;
  std::vector<int> input_nodes;
  std::vector<int> output_nodes;
  // Arc index of secret -> input for each input row.
  std::vector<int> membership_arcs;
};

absl::StatusOr<SmlNetwork> BuildSmlNetwork(const PolicyMatrix& policy,
                                           const SecretPartition& partition);

}  // namespace statleak

#endif  // STATLEAK_FLOW_SML_NETWORK_H_
