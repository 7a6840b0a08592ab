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

#ifndef SUBINFO_ANALYSIS_BRUTE_FORCE_H_
#define SUBINFO_ANALYSIS_BRUTE_FORCE_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "subinfo/core/oracle.h"
#include "subinfo/core/subset.h"

namespace subinfo {

inline constexpr size_t kMaxBruteForceGround = 20;

struct BruteForceResult {
  Subset set;
  double value = 0.0;
  uint64_t subsets_evaluated = 0;
};

// Exact argmax of the objective over |A| <= k, ties to the smallest mask.
BruteForceResult BruteForceMax(const ValueOracle& objective, size_t k, size_t threads = 0);

// Exact argmin over all A of Σ_i D_f(A, anchors[i]), ties to the smallest mask.
BruteForceResult BruteForceMinMetricSum(const ValueOracle& f, std::span<const Subset> anchors,
                                        size_t threads = 0);

}  // namespace subinfo

#endif  // SUBINFO_ANALYSIS_BRUTE_FORCE_H_
