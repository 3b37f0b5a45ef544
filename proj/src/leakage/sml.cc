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

#include "statleak/leakage/sml.h"

#include <algorithm>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "statleak/flow/sml_network.h"

namespace statleak {

namespace {

using u128 = unsigned __int128;

struct Best {
  BigInt raw;  // Scaled by the common denominator.
  uint64_t index = 0;
  bool set = false;
};

// Mixed-radix decode, last class fastest.
std::vector<int> Decode(uint64_t index, const std::vector<size_t>& radix) {
  std::vector<int> digits(radix.size());
  for (size_t k = radix.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % radix[k]);
    index /= radix[k];
  }
  return digits;
}

// Entries are integers (scaled by a common denominator). T is uint64_t with
// 128-bit accumulation, or BigInt.
template <typename T>
Best SearchRange(const std::vector<std::vector<T>>& scaled,
                 const SecretPartition& partition, uint64_t begin,
                 uint64_t end) {
  const auto& classes = partition.classes();
  std::vector<size_t> radix;
  for (const auto& c : classes) radix.push_back(c.size());
  std::vector<int> digits = Decode(begin, radix);
  size_t outputs = scaled.empty() ? 0 : scaled[0].size();
  int s = partition.s();
  std::vector<const std::vector<T>*> rows(s);

  Best best;
  if constexpr (std::is_same_v<T, uint64_t>) {
    u128 best_raw = 0;
    for (uint64_t idx = begin; idx < end; ++idx) {
      for (int k = 0; k < s; ++k) rows[k] = &scaled[classes[k][digits[k]]];
      u128 sum = 0;
      for (size_t j = 0; j < outputs; ++j) {
        uint64_t m = 0;
        for (int k = 0; k < s; ++k) m = std::max(m, (*rows[k])[j]);
        sum += m;
      }
      if (!best.set || sum > best_raw) {
        best_raw = sum;
        best.index = idx;
        best.set = true;
      }
      for (int k = s - 1; k >= 0; --k) {
        if (++digits[k] < static_cast<int>(radix[k])) break;
        digits[k] = 0;
      }
    }
    // u128 -> BigInt via two halves.
    best.raw = BigInt(static_cast<unsigned long>(best_raw >> 64));
    best.raw <<= 64;
    best.raw += BigInt(static_cast<unsigned long>(best_raw));
  } else {
    for (uint64_t idx = begin; idx < end; ++idx) {
      for (int k = 0; k < s; ++k) rows[k] = &scaled[classes[k][digits[k]]];
      BigInt sum = 0;
      for (size_t j = 0; j < outputs; ++j) {
        const BigInt* m = &(*rows[0])[j];
        for (int k = 1; k < s; ++k) {
          if ((*rows[k])[j] > *m) m = &(*rows[k])[j];
        }
        sum += *m;
      }
      if (!best.set || sum > best.raw) {
        best.raw = sum;
        best.index = idx;
        best.set = true;
      }
      for (int k = s - 1; k >= 0; --k) {
        if (++digits[k] < static_cast<int>(radix[k])) break;
        digits[k] = 0;
      }
    }
  }
  return best;
}

template <typename T>
Best Search(const std::vector<std::vector<T>>& scaled,
            const SecretPartition& partition, uint64_t total, int jobs) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(
                                             std::min<uint64_t>(total, 256))));
  if (jobs == 1) return SearchRange(scaled, partition, 0, total);
  std::vector<Best> local(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    uint64_t b = total * w / jobs, e = total * (w + 1) / jobs;
    workers.emplace_back([&, w, b, e] {
      local[w] = SearchRange(scaled, partition, b, e);
    });
  }
  for (auto& t : workers) t.join();
  // Chunks are in index order, so strict improvement keeps the lowest index.
  Best best;
  for (const Best& b : local) {
    if (b.set && (!best.set || b.raw > best.raw)) best = b;
  }
  return best;
}

}  // namespace

Rational AssignmentRawSum(const PolicyMatrix& policy,
                          const PriorAssignment& assignment) {
  Rational sum = 0;
  for (int j = 0; j < policy.num_outputs(); ++j) {
    Rational m = 0;
    for (int row : assignment.rows) m = std::max(m, policy.at(row, j));
    sum += m;
  }
  return sum;
}

absl::StatusOr<LeakageReport> SmlBruteForce(const PolicyMatrix& policy,
                                            const SecretPartition& partition,
                                            const BruteForceOptions& opts) {
  if (partition.num_members() != policy.num_inputs()) {
    return absl::InvalidArgumentError(
        "partition and policy disagree on the number of inputs");
  }
  uint64_t total = partition.AssignmentCount(opts.cap);
  if (total > opts.cap) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "more than ", opts.cap,
        " prior assignments; use the flow method for deterministic policies "
        "or shrink the instance"));
  }
  BigInt den = 1;
  for (int i = 0; i < policy.num_inputs(); ++i) {
    for (const auto& p : policy.row(i)) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.get_den_mpz_t());
    }
  }
  Best best;
  if (den.fits_ulong_p()) {
    std::vector<std::vector<uint64_t>> scaled(policy.num_inputs());
    for (int i = 0; i < policy.num_inputs(); ++i) {
      for (const auto& p : policy.row(i)) {
        BigInt v = p.get_num() * (den / p.get_den());
        scaled[i].push_back(v.get_ui());
      }
    }
    best = Search(scaled, partition, total, opts.jobs);
  } else {
    std::vector<std::vector<BigInt>> scaled(policy.num_inputs());
    for (int i = 0; i < policy.num_inputs(); ++i) {
      for (const auto& p : policy.row(i)) {
        scaled[i].push_back(p.get_num() * (den / p.get_den()));
      }
    }
    best = Search(scaled, partition, total, opts.jobs);
  }
  LeakageReport r;
  r.raw_sum = Rational(best.raw, den);
  r.raw_sum.canonicalize();
  r.base = opts.base;
  r.sml = LogOf(r.raw_sum, opts.base);
  r.method = "bruteforce";
  std::vector<size_t> radix;
  for (const auto& c : partition.classes()) radix.push_back(c.size());
  std::vector<int> digits = Decode(best.index, radix);
  for (int k = 0; k < partition.s(); ++k) {
    r.witness.rows.push_back(partition.classes()[k][digits[k]]);
  }
  return r;
}

absl::StatusOr<LeakageReport> SmlDeterministic(
    const PolicyMatrix& policy, const SecretPartition& partition,
    LogBase base) {
  absl::StatusOr<SmlNetwork> sn = BuildSmlNetwork(policy, partition);
  if (!sn.ok()) return sn.status();
  absl::StatusOr<FlowResult> fr = MinCostFlow(sn->net);
  if (!fr.ok()) return fr.status();
  LeakageReport r;
  r.raw_sum = -fr->total_cost;
  r.base = base;
  r.sml = LogOf(r.raw_sum, base);
  r.method = "flow";
  // Routed secrets use their flow-carrying input; the rest take their first
  // member, which cannot lower the count of distinct outputs hit.
  r.witness.rows.assign(partition.s(), -1);
  for (int k = 0; k < partition.s(); ++k) {
    for (int i : partition.classes()[k]) {
      if (fr->flow[sn->membership_arcs[i]] > 0) r.witness.rows[k] = i;
    }
    if (r.witness.rows[k] < 0) r.witness.rows[k] = partition.classes()[k][0];
  }
  return r;
}

nlohmann::json ReportToJson(const LeakageReport& report,
                            const PolicyMatrix& policy,
                            const SecretPartition& partition,
                            bool include_witness) {
  nlohmann::json j = {{"raw_sum", FormatRational(report.raw_sum)},
                      {"sml", report.sml},
                      {"log_base", LogBaseName(report.base)},
                      {"method", report.method},
                      {"s", partition.s()}};
  if (include_witness) {
    nlohmann::json w = nlohmann::json::object();
    for (int k = 0; k < partition.s(); ++k) {
      w[partition.secrets()[k].id] = policy.inputs()[report.witness.rows[k]];
    }
    j["argmax_prior"] = w;
  }
  return j;
}

}  // namespace statleak
