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

#ifndef SUBINFO_ANALYSIS_TABLE_H_
#define SUBINFO_ANALYSIS_TABLE_H_

#include <cstddef>
#include <vector>

#include "subinfo/core/oracle.h"

namespace subinfo {

inline constexpr size_t kMaxTabulatedGround = 24;

// f on every subset, indexed by mask. Evaluations bypass the oracle cache so a
// full sweep does not evict everything else. Throws ResourceError past
// `n_limit` (itself capped at kMaxTabulatedGround).
std::vector<double> TabulateAll(const ValueOracle& f, size_t n_limit, size_t threads = 0);

}  // namespace subinfo

#endif  // SUBINFO_ANALYSIS_TABLE_H_
