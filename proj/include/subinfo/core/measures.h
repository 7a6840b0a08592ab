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

#ifndef SUBINFO_CORE_MEASURES_H_
#define SUBINFO_CORE_MEASURES_H_

// Information measures computed purely through oracle calls. Every function
// assumes f is normalized; the multi-set measures sum over non-empty index
// sets only, which matches the inclusion-exclusion definition when f(∅) = 0.
//
// Symmetric measures sort their arguments by mask value before evaluating, so
// swapping arguments gives bit-identical results.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subinfo/core/oracle.h"
#include "subinfo/core/subset.h"

namespace subinfo {

// Largest k accepted by the generic multi-set path (2^k - 1 oracle calls).
inline constexpr size_t kMaxGenericMultisetArity = 20;

// f(A | B) = f(A ∪ B) - f(B).
double ConditionalGain(const ValueOracle& f, const Subset& a, const Subset& b);

// I_f(A; B) = f(A) + f(B) - f(A ∪ B).
double MutualInformation(const ValueOracle& f, const Subset& a, const Subset& b);

// I_f(A; B | C) = I_g(A; B) with g(X) = f(X ∪ C) - f(C).
double ConditionalMutualInformation(const ValueOracle& f, const Subset& a, const Subset& b,
                                    const Subset& c);

// I_f(A_1; ...; A_k) = -Σ_{T ⊆ [k]} (-1)^{|T|} f(∪_{i∈T} A_i).
// Throws ArgumentError for k = 0 and ResourceError for k > 20.
double MultisetMutualInformation(const ValueOracle& f, std::span<const Subset> sets);
double ConditionalMultisetMutualInformation(const ValueOracle& f, std::span<const Subset> sets,
                                            const Subset& c);

// C_f(A_1, ..., A_k) = Σ f(A_i) - f(∪ A_i), and its conditional version.
double TotalCorrelation(const ValueOracle& f, std::span<const Subset> sets);
double ConditionalTotalCorrelation(const ValueOracle& f, std::span<const Subset> sets,
                                   const Subset& c);

// D_f(A; B) = f(A | B) + f(B | A).
double VariationOfInformation(const ValueOracle& f, const Subset& a, const Subset& b);

// |I_f(A; B)| <= tol. Throws ArgumentError for negative tol.
bool IsIndependent(const ValueOracle& f, const Subset& a, const Subset& b, double tol);

enum class MeasureKind {
  kInfo,
  kCondGain,
  kMI,
  kCMI,
  kMultiMI,
  kTotalCorr,
  kCondTotalCorr,
  kVarInfo,
};

enum class ComputePath { kGeneric, kClosedForm };

std::string MeasureKindName(MeasureKind kind);
std::optional<MeasureKind> ParseMeasureKind(const std::string& name);
std::string ComputePathName(ComputePath path);

// A measure over named operand sets. `condition` is required for kCMI and
// kCondTotalCorr, optional for kMultiMI (conditional multi-set MI) and
// ignored otherwise.
struct MeasureRequest {
  MeasureKind kind = MeasureKind::kMI;
  std::vector<Subset> sets;
  std::optional<Subset> condition;
};

struct MeasureResult {
  double value = 0.0;
  MeasureKind measure = MeasureKind::kMI;
  // Distinct subsets whose value was requested from the oracle.
  uint64_t oracle_calls = 0;
  ComputePath path = ComputePath::kGeneric;
};

// Validates the request's arity and evaluates it on the generic path.
MeasureResult ComputeMeasure(const ValueOracle& f, const MeasureRequest& request);

}  // namespace subinfo

#endif  // SUBINFO_CORE_MEASURES_H_
