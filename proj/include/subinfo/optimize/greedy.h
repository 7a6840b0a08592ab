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

#ifndef SUBINFO_OPTIMIZE_GREEDY_H_
#define SUBINFO_OPTIMIZE_GREEDY_H_

#include "subinfo/core/oracle.h"
#include "subinfo/optimize/types.h"

namespace subinfo {

// Gains at or below this count as "no improvement".
inline constexpr double kPositiveGain = 1e-12;

// Cardinality-constrained greedy for monotone submodular objectives. Stops
// early once no element has positive gain. Ties go to the smallest index. The
// guard requires a monotone submodular objective.
SelectionReport GreedyMax(const ValueOracle& objective, const OptimizerConfig& config);

// Randomized greedy for possibly non-monotone submodular objectives: each of
// the k steps draws uniformly from a pool of exactly k candidates, namely the
// positive-gain elements with the largest gains padded with no-op dummies.
// The guard requires a submodular objective.
SelectionReport RandomizedGreedyMax(const ValueOracle& objective, const OptimizerConfig& config);

}  // namespace subinfo

#endif  // SUBINFO_OPTIMIZE_GREEDY_H_
