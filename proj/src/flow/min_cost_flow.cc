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

#include <algorithm>
#include <limits>
#include <optional>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "statleak/flow/network.h"

namespace statleak {

namespace {

// Residual edge 2k is arc k forward, 2k+1 its reverse.
struct Residual {
  int to;
  int64_t cap;
  Rational cost;
};

absl::Status CheckNoNegativeCycle(const FlowNetwork& net) {
  int n = net.num_nodes();
  std::vector<Rational> dist(n, Rational(0));
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Arc& a : net.arcs()) {
      if (a.capacity <= 0) continue;
      Rational cand = dist[a.tail] + a.cost;
      if (cand < dist[a.head]) {
        dist[a.head] = cand;
        changed = true;
      }
    }
    if (!changed) return absl::OkStatus();
  }
  return absl::FailedPreconditionError(
      "network contains a negative-cost cycle");
}

}  // namespace

absl::StatusOr<FlowResult> MinCostFlow(const FlowNetwork& net) {
  if (absl::Status s = net.Validate(); !s.ok()) return s;
  if (absl::Status s = CheckNoNegativeCycle(net); !s.ok()) return s;

  int n = net.num_nodes();
  const auto& arcs = net.arcs();
  std::vector<Residual> edges;
  std::vector<std::vector<int>> out(n);
  edges.reserve(arcs.size() * 2);
  for (size_t k = 0; k < arcs.size(); ++k) {
    const Arc& a = arcs[k];
    out[a.tail].push_back(static_cast<int>(edges.size()));
    edges.push_back({a.head, a.capacity, a.cost});
    out[a.head].push_back(static_cast<int>(edges.size()));
    edges.push_back({a.tail, 0, -a.cost});
  }

  FlowResult result;
  result.total_cost = 0;
  while (true) {
    // Bellman-Ford (queue based) on the residual graph from the source.
    std::vector<std::optional<Rational>> dist(n);
    std::vector<int> via(n, -1);
    std::vector<char> queued(n, 0);
    std::vector<int> queue = {net.source()};
    dist[net.source()] = Rational(0);
    queued[net.source()] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      queued[u] = 0;
      for (int e : out[u]) {
        const Residual& r = edges[e];
        if (r.cap <= 0) continue;
        Rational cand = *dist[u] + r.cost;
        if (!dist[r.to] || cand < *dist[r.to]) {
          dist[r.to] = cand;
          via[r.to] = e;
          if (!queued[r.to]) {
            queued[r.to] = 1;
            queue.push_back(r.to);
          }
        }
      }
    }
    if (!dist[net.sink()] || *dist[net.sink()] >= 0) break;

    int64_t push = std::numeric_limits<int64_t>::max();
    for (int v = net.sink(); v != net.source(); v = edges[via[v] ^ 1].to) {
      push = std::min(push, edges[via[v]].cap);
    }
    for (int v = net.sink(); v != net.source(); v = edges[via[v] ^ 1].to) {
      edges[via[v]].cap -= push;
      edges[via[v] ^ 1].cap += push;
    }
    result.value += push;
    result.total_cost += *dist[net.sink()] * push;
  }

  result.flow.resize(arcs.size());
  for (size_t k = 0; k < arcs.size(); ++k) {
    result.flow[k] = edges[2 * k + 1].cap;
  }
  return result;
}

}  // namespace statleak
