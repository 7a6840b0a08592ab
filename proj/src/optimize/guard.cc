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

#include "subinfo/optimize/guard.h"

#include <algorithm>

#include "subinfo/analysis/properties.h"
#include "subinfo/core/error.h"
#include "subinfo/optimize/types.h"

namespace subinfo {

std::string GuardModeName(GuardMode m) {
  switch (m) {
    case GuardMode::kTrustFlags: return "trust";
    case GuardMode::kVerifyAtDeskScale: return "verify";
    case GuardMode::kUnchecked: return "unchecked";
  }
  return "unknown";
}

std::optional<GuardMode> ParseGuardMode(const std::string& name) {
  for (GuardMode m : {GuardMode::kTrustFlags, GuardMode::kVerifyAtDeskScale,
                      GuardMode::kUnchecked}) {
    if (GuardModeName(m) == name) return m;
  }
  return std::nullopt;
}

std::string GuardOutcomeName(GuardOutcome o) {
  switch (o) {
    case GuardOutcome::kVerified: return "verified";
    case GuardOutcome::kTrusted: return "trusted";
    case GuardOutcome::kUnchecked: return "unchecked";
  }
  return "unknown";
}

std::string PartitionObjectiveName(PartitionObjective o) {
  return o == PartitionObjective::kTotalCorrelation ? "total_correlation" : "multiset_mi";
}

std::string DirectionName(Direction d) { return d == Direction::kMax ? "max" : "min"; }

GuardOutcome Weakest(GuardOutcome a, GuardOutcome b) {
  return static_cast<GuardOutcome>(std::max(static_cast<int>(a), static_cast<int>(b)));
}

namespace {

void TrustClaims(const ValueOracle& f, const Requirements& need, const std::string& role) {
  const FunctionClaims c = f.claims();
  auto require = [&](bool wanted, bool claimed, const char* what) {
    if (wanted && !claimed) {
      throw StructuralError(role + " (" + f.function().name() + ") does not claim to be " +
                            what + "; verify it or run with the guard off");
    }
  };
  require(need.monotone, c.monotone, "monotone");
  require(need.submodular, c.submodular, "submodular");
  require(need.second_order_supermodular, c.second_order_supermodular,
          "second-order supermodular");
}

void Verify(const ValueOracle& f, Property p, const std::string& role, size_t threads) {
  CheckOptions options;
  options.n_limit = kGuardVerifyLimit;
  options.threads = threads;
  const PropertyReport r = CheckProperty(f, p, options);
  if (r.verdict == Verdict::kViolated) {
    throw StructuralError(role + " (" + f.function().name() + ") is not " + PropertyName(p) +
                          ": " + r.witness->description);
  }
}

}  // namespace

GuardOutcome EnforceRequirements(const ValueOracle& f, const Requirements& need, GuardMode mode,
                                 const std::string& role, size_t threads) {
  if (mode == GuardMode::kUnchecked) return GuardOutcome::kUnchecked;
  if (mode == GuardMode::kTrustFlags || f.ground_size() > kGuardVerifyLimit) {
    TrustClaims(f, need, role);
    return GuardOutcome::kTrusted;
  }
  if (need.monotone) Verify(f, Property::kMonotone, role, threads);
  if (need.submodular) Verify(f, Property::kSubmodular, role, threads);
  if (need.second_order_supermodular) {
    Verify(f, Property::kSecondOrderSupermodular, role, threads);
  }
  return GuardOutcome::kVerified;
}

}  // namespace subinfo
