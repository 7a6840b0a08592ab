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

#ifndef SUBINFO_ANALYSIS_PROPERTIES_H_
#define SUBINFO_ANALYSIS_PROPERTIES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subinfo/core/oracle.h"
#include "subinfo/core/subset.h"

namespace subinfo {

enum class Property {
  kNormalized,
  kMonotone,
  kSubmodular,
  kSecondOrderSupermodular,
  kPseudoMetricAxioms,
};

enum class Verdict { kHolds, kViolated };

std::string PropertyName(Property p);
std::optional<Property> ParseProperty(const std::string& name);
std::string VerdictName(Verdict v);

// What a violation looks like for each property:
//   normalized:  sets {∅}
//   monotone:    sets {S}, elements {j}; margin f(j|S)
//   submodular:  sets {S}, elements {j, k}; margin -f2(j,k;S)
//   second-order supermodular: sets {A}, elements {i, j, k};
//                margin f3(i,j,k;A) = f2(j,k;A+i) - f2(j,k;A)
//   pseudo-metric: sets {A, B, C}; description names the failed axiom.
// `values` holds the oracle values the margin was computed from.
struct Witness {
  std::vector<Subset> sets;
  std::vector<size_t> elements;
  std::vector<double> values;
  double margin = 0.0;
  std::string description;
};

struct PropertyReport {
  Property property = Property::kMonotone;
  Verdict verdict = Verdict::kHolds;
  std::optional<Witness> witness;
  uint64_t pairs_checked = 0;
  // Smallest slack over every inequality checked; negative past -tol means
  // violated. +inf when nothing was checked.
  double worst_margin = 0.0;
};

struct CheckOptions {
  size_t n_limit = 16;
  // Pseudo-metric axioms enumerate subset triples, 8^n of them.
  size_t triple_n_limit = 7;
  double tol = 1e-9;
  size_t threads = 0;
};

// All checkers are exhaustive; they throw ResourceError when the ground set is
// larger than the relevant limit. The witness is the first violation in
// enumeration order (ascending mask, then ascending elements), independent of
// the thread count.
PropertyReport CheckNormalized(const ValueOracle& f, const CheckOptions& options = {});
PropertyReport CheckMonotone(const ValueOracle& f, const CheckOptions& options = {});
PropertyReport CheckSubmodular(const ValueOracle& f, const CheckOptions& options = {});
PropertyReport CheckSecondOrderSupermodular(const ValueOracle& f,
                                            const CheckOptions& options = {});
PropertyReport CheckPseudoMetricAxioms(const ValueOracle& f, const CheckOptions& options = {});
PropertyReport CheckProperty(const ValueOracle& f, Property property,
                             const CheckOptions& options = {});

// Re-evaluates the witness through `f` (not the recorded values) and returns
// true when the violation is still there beyond `tol`.
bool ReproducesViolation(const ValueOracle& f, const PropertyReport& report, double tol = 1e-9);

}  // namespace subinfo

#endif  // SUBINFO_ANALYSIS_PROPERTIES_H_
