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

#ifndef SUBINFO_CLI_INSTANCE_H_
#define SUBINFO_CLI_INSTANCE_H_

// Problem instances as JSON documents. A document names the ground set, the
// function, a table of named subsets and exactly one task:
//
//   {"schema_version": 1,
//    "ground_set": {"size": 4, "labels": ["a", "b", "c", "d"]},
//    "function": {"family": "modular", "params": {"w": [1, 2, 3, 4]}},
//    "sets": {"A": [0, 1], "B": [1, 2]},
//    "task": {"kind": "measure", "params": {"measure": "mi", "sets": ["A", "B"]}}}
//
// docs/instance_schema.md lists the parameters of every family and task.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "subinfo/core/error.h"
#include "subinfo/core/measures.h"
#include "subinfo/core/subset.h"
#include "subinfo/functions/function_spec.h"
#include "subinfo/optimize/metric.h"
#include "subinfo/optimize/types.h"

namespace subinfo::cli {

inline constexpr int kSchemaVersion = 1;

// Parse or validation failure. The message starts with the JSON location
// ("line 3, column 7") or the offending field ("task.params.k").
class InstanceError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

struct MeasureTask {
  MeasureKind measure = MeasureKind::kMI;
  std::vector<std::string> sets;
  std::optional<std::string> condition;
  friend bool operator==(const MeasureTask&, const MeasureTask&) = default;
};

// property is a Property name or "curvature"; `at` names the sets whose
// curvature is reported and is only allowed for "curvature".
struct CheckTask {
  std::string property;
  std::vector<std::string> at;
  friend bool operator==(const CheckTask&, const CheckTask&) = default;
};

enum class SelectDriver {
  kGreedy,
  kRandomizedGreedy,
  kSmi,
  kCg,
  kCsmi,
  kNsmi,
  kSymmetricMi,
};

std::string SelectDriverName(SelectDriver d);
std::optional<SelectDriver> ParseSelectDriver(const std::string& name);

struct SelectTask {
  SelectDriver driver = SelectDriver::kGreedy;
  size_t k = 1;
  uint64_t seed = 0;
  bool lazy = true;
  double lambda = 0.0;
  std::optional<std::string> query;
  std::optional<std::string> privacy;
  // Second function g for the summarization drivers.
  std::optional<FunctionSpec> g;
  friend bool operator==(const SelectTask&, const SelectTask&) = default;
};

struct PartitionTask {
  PartitionObjective objective = PartitionObjective::kTotalCorrelation;
  Direction direction = Direction::kMax;
  size_t k = 2;
  uint64_t seed = 0;
  friend bool operator==(const PartitionTask&, const PartitionTask&) = default;
};

struct MetricMinTask {
  std::vector<std::string> anchors;
  MetricMode mode = MetricMode::kExact;
  friend bool operator==(const MetricMinTask&, const MetricMinTask&) = default;
};

using Task = std::variant<MeasureTask, CheckTask, SelectTask, PartitionTask, MetricMinTask>;

// "measure", "check", "select", "partition", "metric_min".
std::string TaskKindName(const Task& task);

struct Instance {
  size_t ground_size = 0;
  std::vector<std::string> labels;
  FunctionSpec function;
  std::map<std::string, Subset> sets;
  Task task;
  friend bool operator==(const Instance&, const Instance&) = default;

  const Subset& Set(const std::string& name) const { return sets.at(name); }
};

Instance ParseInstance(const std::string& text);
Instance InstanceFromJson(const nlohmann::json& doc);
nlohmann::json InstanceToJson(const Instance& instance);
// FormatJson of InstanceToJson.
std::string SerializeInstance(const Instance& instance);

// `path` prefixes diagnostics. ground_size is needed by families whose
// parameters do not determine it (truncation).
FunctionSpec FunctionSpecFromJson(const nlohmann::json& j, size_t ground_size,
                                  const std::string& path);
nlohmann::json FunctionSpecToJson(const FunctionSpec& spec);

std::string ReadFile(const std::string& path);

// Two-space indentation, except that arrays of scalars stay on one line so
// kernels read as matrices. Ends with a newline.
std::string FormatJson(const nlohmann::json& j);

}  // namespace subinfo::cli

#endif  // SUBINFO_CLI_INSTANCE_H_
