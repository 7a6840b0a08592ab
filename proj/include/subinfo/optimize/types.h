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

#ifndef SUBINFO_OPTIMIZE_TYPES_H_
#define SUBINFO_OPTIMIZE_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subinfo/core/subset.h"
#include "subinfo/optimize/guard.h"

namespace subinfo {

struct OptimizerConfig {
  size_t budget = 1;
  uint64_t seed = 0;
  bool lazy = true;
  GuardMode guard = GuardMode::kVerifyAtDeskScale;
  size_t threads = 0;
};

// element is empty for a randomized-greedy step that drew a padding dummy.
struct GainStep {
  std::optional<size_t> element;
  double gain = 0.0;
};

// value >= factor * (OPT - slack) for maximization; for minimization
// value <= factor * OPT. vacuous marks a factor that promises nothing.
struct Guarantee {
  double factor = 1.0;
  double slack = 0.0;
  bool vacuous = false;
  std::string description;
};

struct SelectionReport {
  std::string driver;
  Subset chosen;
  double objective_value = 0.0;
  std::vector<GainStep> gain_trace;
  std::optional<Guarantee> guarantee;
  uint64_t oracle_calls = 0;
  uint64_t seed = 0;
  GuardOutcome guard = GuardOutcome::kUnchecked;
  // Driver inputs and derived scalars (lambda, scale, ...), in insertion order.
  std::vector<std::pair<std::string, double>> parameters;
};

enum class PartitionObjective { kTotalCorrelation, kMultisetMi };
enum class Direction { kMax, kMin };

std::string PartitionObjectiveName(PartitionObjective o);
std::string DirectionName(Direction d);

struct PartitionReport {
  std::vector<Subset> blocks;
  double objective = 0.0;
  PartitionObjective objective_kind = PartitionObjective::kTotalCorrelation;
  Direction direction = Direction::kMax;
  uint64_t oracle_calls = 0;
  uint64_t seed = 0;
  size_t local_search_moves = 0;
  GuardOutcome guard = GuardOutcome::kUnchecked;
};

}  // namespace subinfo

#endif  // SUBINFO_OPTIMIZE_TYPES_H_
