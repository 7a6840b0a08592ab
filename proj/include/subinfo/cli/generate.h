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

#ifndef SUBINFO_CLI_GENERATE_H_
#define SUBINFO_CLI_GENERATE_H_

// Seeded fixture generator. The output is an instance fragment holding
// "ground_set" and "function"; add "sets" and "task" to make it runnable.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace subinfo::cli {

enum class GenerateKind { kKernel, kCoverage, kProbCover };

std::string GenerateKindName(GenerateKind k);
std::optional<GenerateKind> ParseGenerateKind(const std::string& name);

struct GenerateParams {
  size_t n = 0;
  uint64_t seed = 0;
  // kernel: symmetric, unit diagonal. Off-diagonal entries are this constant
  // when set, otherwise multiples of 0.001 drawn uniformly from [0, 1].
  std::optional<double> off_diagonal;
  // kernel: "facility_location" or "graph_cut".
  std::string family = "facility_location";
  double lambda = 2.0;
  // coverage and prob-cover: number of concepts, n when 0.
  size_t concepts = 0;
  // coverage: every concept is covered by exactly this many elements.
  size_t multiplicity = 1;
  // prob-cover: chance that an element touches a concept at all.
  double density = 0.5;
};

// Throws ArgumentError on invalid parameters. Identical inputs give
// identical output on every platform.
nlohmann::json Generate(GenerateKind kind, const GenerateParams& params);

}  // namespace subinfo::cli

#endif  // SUBINFO_CLI_GENERATE_H_
