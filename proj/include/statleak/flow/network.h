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

#ifndef STATLEAK_FLOW_NETWORK_H_
#define STATLEAK_FLOW_NETWORK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "statleak/core/rational.h"

namespace statleak {

struct Arc {
  int tail;
  int head;
  int64_t capacity;
  Rational cost;
};

class FlowNetwork {
 public:
  int AddNode(std::string name);
  int AddArc(int tail, int head, int64_t capacity, Rational cost);
  void set_source(int v) { source_ = v; }
  void set_sink(int v) { sink_ = v; }

  int source() const { return source_; }
  int sink() const { return sink_; }
  int num_nodes() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Distinct source and sink, arcs inside range, no arc into the source or
  // out of the sink, non-negative capacities.
  absl::Status Validate() const;
  std::string ToDot() const;

 private:
  std::vector<std::string> names_;
  std::vector<Arc> arcs_;
  int source_ = -1;
  int sink_ = -1;
};

struct FlowResult {
  std::vector<int64_t> flow;  // Per arc, same order as the network.
  Rational total_cost;
  int64_t value = 0;
};

// Minimum cost over integral flows of any value. Augments along shortest
// residual paths while their cost is negative. Rejects networks that contain
// a negative-cost cycle.
absl::StatusOr<FlowResult> MinCostFlow(const FlowNetwork& net);

}  // namespace statleak

#endif  // STATLEAK_FLOW_NETWORK_H_
