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

#ifndef SUBINFO_OPTIMIZE_METRIC_H_
#define SUBINFO_OPTIMIZE_METRIC_H_

#include <span>
#include <string>

#include "subinfo/core/oracle.h"
#include "subinfo/core/subset.h"
#include "subinfo/optimize/types.h"

namespace subinfo {

enum class MetricMode { kExact, kSurrogate };

std::string MetricModeName(MetricMode m);

// Minimizes Σ_i D_f(A, S_i). Exact enumerates all subsets. Surrogate
// enumerates the minimizer of Σ_i [f(A\S_i) + f(S_i\A)], which is within
// 1/(1 - κ_f) of the exact optimum; the report marks the factor vacuous when
// κ_f = 1. objective_value is always the true D_f sum of the returned set.
// Both modes need n <= 20.
SelectionReport MinimizeMetricSum(const ValueOracle& f, std::span<const Subset> anchors,
                                  MetricMode mode, const OptimizerConfig& config);

}  // namespace subinfo

#endif  // SUBINFO_OPTIMIZE_METRIC_H_
