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

#ifndef SUBINFO_OPTIMIZE_PARTITION_H_
#define SUBINFO_OPTIMIZE_PARTITION_H_

#include <cstddef>

#include "subinfo/core/oracle.h"
#include "subinfo/optimize/types.h"

namespace subinfo {

// Greedy assignment in a seeded random order. Max puts each element where its
// marginal gain is largest (submodular welfare); blocks may stay empty. Min
// first places one element in each block, then puts each remaining element
// where its gain is smallest. The reported objective is C_f over the blocks.
// Requires f monotone submodular under the guard.
PartitionReport PartitionTotalCorrelation(const ValueOracle& f, size_t k_parts,
                                          Direction direction, const OptimizerConfig& config);

// Seeded greedy assignment maximizing the multi-set mutual information of
// the blocks, followed by move/swap local search (at most 10n moves) that
// keeps every block non-empty. Uses the family closed form when there is one.
PartitionReport PartitionMultisetMiMax(const ValueOracle& f, size_t k_parts,
                                       const OptimizerConfig& config);

}  // namespace subinfo

#endif  // SUBINFO_OPTIMIZE_PARTITION_H_
