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

#ifndef SUBINFO_FUNCTIONS_FAMILY_FUNCTION_H_
#define SUBINFO_FUNCTIONS_FAMILY_FUNCTION_H_

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "subinfo/core/measures.h"
#include "subinfo/core/oracle.h"
#include "subinfo/core/subset.h"
#include "subinfo/functions/function_spec.h"

namespace subinfo {

namespace internal {
class FamilyModel;
}  // namespace internal

// A validated FunctionSpec compiled into an evaluable set function, plus the
// per-family closed forms for the information measures. The closed-form
// methods return nullopt when the family has no closed form for that measure
// and throw PreconditionError when one exists but its operands violate a
// structural requirement (e.g. disjointness for probabilistic coverage).
class FamilyFunction : public SetFunction {
 public:
  // Throws ArgumentError if the spec is inconsistent.
  explicit FamilyFunction(FunctionSpec spec);
  ~FamilyFunction() override;

  size_t ground_size() const override { return spec_.ground_size; }
  double Evaluate(const Subset& a) const override;
  FunctionClaims claims() const override;
  std::string name() const override { return FamilyName(spec_.family()); }

  const FunctionSpec& spec() const { return spec_; }

  std::optional<double> ClosedFormConditionalGain(const Subset& a, const Subset& b) const;
  std::optional<double> ClosedFormMutualInformation(const Subset& a, const Subset& b) const;
  std::optional<double> ClosedFormMultisetMi(std::span<const Subset> sets) const;
  std::optional<double> ClosedFormMetric(const Subset& a, const Subset& b) const;
  std::optional<double> ClosedFormConditionalMi(const Subset& a, const Subset& b,
                                                const Subset& c) const;

  // The closed-form counterpart of ComputeMeasure, or nullopt when this family
  // has none for the request. oracle_calls is always 0.
  std::optional<MeasureResult> ClosedFormMeasure(const MeasureRequest& request) const;

 private:
  void CheckOperand(const Subset& s) const;

  FunctionSpec spec_;
  std::unique_ptr<const internal::FamilyModel> model_;
};

std::shared_ptr<const FamilyFunction> MakeFunction(FunctionSpec spec);

// One-shot helpers; each compiles the spec. Prefer FamilyFunction in loops.
double EvaluateSpec(const FunctionSpec& spec, const Subset& a);
double ClosedFormConditionalMiProbCover(const FunctionSpec& spec, const Subset& a,
                                        const Subset& b, const Subset& c);

}  // namespace subinfo

#endif  // SUBINFO_FUNCTIONS_FAMILY_FUNCTION_H_
