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

#ifndef SUBINFO_CLI_RUNNER_H_
#define SUBINFO_CLI_RUNNER_H_

#include <cstdint>
#include <exception>
#include <optional>
#include <string>

#include "json.hpp"
#include "subinfo/cli/instance.h"
#include "subinfo/optimize/guard.h"

namespace subinfo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitStructural = 2,
  kExitDisagreement = 3,
  kExitResource = 4,
};

// kAuto uses a closed form when the family has one that applies and falls
// back to oracle calls otherwise. kClosedForm insists on the closed form for
// measure tasks. kGeneric hides the family so every quantity goes through
// the oracle. kBoth runs the task both ways and compares the headline value.
enum class PathMode { kAuto, kClosedForm, kGeneric, kBoth };

std::string PathModeName(PathMode m);

struct RunOptions {
  PathMode path = PathMode::kAuto;
  std::optional<uint64_t> seed_override;
  GuardMode guard = GuardMode::kVerifyAtDeskScale;
  // 0 defers to SMI_THREADS, then to the hardware.
  size_t threads = 0;
  double both_tolerance = 1e-9;
};

struct RunResult {
  int exit_code = kExitOk;
  // Null when the run failed before producing a result.
  nlohmann::json report;
  std::string error;
};

int ExitCodeFor(const std::exception& e);

// Never throws for library errors; they come back as an exit code and message.
RunResult RunInstance(const Instance& instance, const std::string& digest, const RunOptions& options);
// Parses `text` first; the digest covers the exact bytes.
RunResult RunText(const std::string& text, const RunOptions& options);

}  // namespace subinfo::cli

#endif  // SUBINFO_CLI_RUNNER_H_
