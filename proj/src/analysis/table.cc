// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subinfo/analysis/table.h"

#include <algorithm>
#include <cstdint>
#include <string>

#include "subinfo/core/error.h"
#include "subinfo/core/parallel.h"

namespace subinfo {

std::vector<double> TabulateAll(const ValueOracle& f, size_t n_limit, size_t threads) {
  const size_t n = f.ground_size();
  const size_t limit = std::min(n_limit, kMaxTabulatedGround);
  if (n > limit) {
    throw ResourceError("exhaustive enumeration over " + std::to_string(n) +
                        " elements exceeds the limit of " + std::to_string(limit));
  }
  const size_t total = size_t{1} << n;
  std::vector<double> values(total);
  ParallelChunks(total, std::min<size_t>(total, 256), threads,
                 [&](size_t, size_t begin, size_t end) {
                   for (size_t m = begin; m < end; ++m) {
                     values[m] = f.EvaluateUncached(Subset::FromMask(n, m));
                   }
                 });
  return values;
}

}  // namespace subinfo
