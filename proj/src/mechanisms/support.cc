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

#include "statleak/mechanisms/support.h"

namespace statleak {

OutputSupport EstimatedSupport(std::vector<bool> estimated) {
  return [estimated = std::move(estimated)](const CategoricalParam& in) {
    std::vector<bool> allowed(estimated);
    allowed.resize(std::max<size_t>(allowed.size(), in.d()), false);
    for (int i = 0; i < in.d(); ++i) {
      if (in.count(i) > 0) allowed[i] = true;
    }
    return allowed;
  };
}

std::vector<bool> AllowedFor(const OutputSupport& support,
                             const CategoricalParam& in) {
  if (!support) return std::vector<bool>(in.d(), true);
  return support(in);
}

bool WithinSupport(const CategoricalParam& out,
                   const std::vector<bool>& allowed) {
  for (int i = 0; i < out.d(); ++i) {
    if (out.count(i) > 0 && (i >= static_cast<int>(allowed.size()) ||
                             !allowed[i])) {
      return false;
    }
  }
  return true;
}

std::vector<int64_t> UniformOver(int64_t tau, int d,
                                 const std::vector<int>& categories,
                                 Rng& rng) {
  std::vector<int64_t> out(d, 0);
  int a = static_cast<int>(categories.size());
  if (a == 0) return out;
  std::vector<int64_t> comp;
  BigInt size = CompositionCount(tau, a);
  if (a <= 64 && size.fits_ulong_p()) {
    BigInt idx = rng.UniformBig(size);
    comp = UnrankParam(idx, a, tau)->counts();
  } else {
    comp = UniformComposition(tau, a, rng);
  }
  for (int i = 0; i < a; ++i) out[categories[i]] = comp[i];
  return out;
}

}  // namespace statleak
