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

#ifndef SUBINFO_OPTIMIZE_GUARD_H_
#define SUBINFO_OPTIMIZE_GUARD_H_

#include <cstddef>
#include <optional>
#include <string>

#include "subinfo/core/oracle.h"

namespace subinfo {

enum class GuardMode { kTrustFlags, kVerifyAtDeskScale, kUnchecked };

// What the guard actually did: checked exhaustively, relied on the
// provider's claims (trust mode, or verify mode past the size limit), or
// skipped everything.
enum class GuardOutcome { kVerified, kTrusted, kUnchecked };

std::string GuardModeName(GuardMode m);
std::optional<GuardMode> ParseGuardMode(const std::string& name);
std::string GuardOutcomeName(GuardOutcome o);

struct Requirements {
  bool monotone = false;
  bool submodular = false;
  bool second_order_supermodular = false;
};

inline constexpr size_t kGuardVerifyLimit = 16;

// Throws StructuralError naming `role` and, when verified, the witness.
GuardOutcome EnforceRequirements(const ValueOracle& f, const Requirements& need, GuardMode mode,
                                 const std::string& role, size_t threads = 0);

// Combines outcomes of several enforced inputs: the weakest wins.
GuardOutcome Weakest(GuardOutcome a, GuardOutcome b);

}  // namespace subinfo

#endif  // SUBINFO_OPTIMIZE_GUARD_H_
