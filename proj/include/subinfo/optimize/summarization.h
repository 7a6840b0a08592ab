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

#ifndef SUBINFO_OPTIMIZE_SUMMARIZATION_H_
#define SUBINFO_OPTIMIZE_SUMMARIZATION_H_

#include <memory>
#include <string>

#include "subinfo/core/oracle.h"
#include "subinfo/core/subset.h"
#include "subinfo/optimize/types.h"

namespace subinfo {

using OraclePtr = std::shared_ptr<const ValueOracle>;

// I_f(A; Q) + λ g(A). g may be null, meaning g ≡ 0.
class SmiObjective : public SetFunction {
 public:
  SmiObjective(OraclePtr f, OraclePtr g, Subset query, double lambda);
  size_t ground_size() const override { return f_->ground_size(); }
  double Evaluate(const Subset& a) const override;
  FunctionClaims claims() const override;
  std::string name() const override { return "smi"; }

 private:
  OraclePtr f_, g_;
  Subset query_;
  double lambda_;
};

// f(A | P) + λ g(A).
class CgObjective : public SetFunction {
 public:
  CgObjective(OraclePtr f, OraclePtr g, Subset privacy, double lambda);
  size_t ground_size() const override { return f_->ground_size(); }
  double Evaluate(const Subset& a) const override;
  FunctionClaims claims() const override;
  std::string name() const override { return "cg"; }

 private:
  OraclePtr f_, g_;
  Subset privacy_;
  double lambda_;
};

// I_f(A; Q | P) + λ g(A).
class CsmiObjective : public SetFunction {
 public:
  CsmiObjective(OraclePtr f, OraclePtr g, Subset query, Subset privacy, double lambda);
  size_t ground_size() const override { return f_->ground_size(); }
  double Evaluate(const Subset& a) const override;
  FunctionClaims claims() const override;
  std::string name() const override { return "csmi"; }

 private:
  OraclePtr f_, g_;
  Subset query_, privacy_;
  double lambda_;
};

// scale · I_f(A; Ω \ A).
class SymmetricMiObjective : public SetFunction {
 public:
  SymmetricMiObjective(OraclePtr f, double scale);
  size_t ground_size() const override { return f_->ground_size(); }
  double Evaluate(const Subset& a) const override;
  FunctionClaims claims() const override;
  std::string name() const override { return "symmetric_mi"; }

 private:
  OraclePtr f_;
  double scale_;
};

// Lazy greedy on the composite objectives. The guard checks f and g
// separately: SMI and CSMI need f monotone, submodular and second-order
// supermodular; every driver needs g monotone submodular; CG needs f monotone
// submodular.
SelectionReport SmiMax(OraclePtr f, OraclePtr g, const Subset& query, double lambda,
                       const OptimizerConfig& config);
SelectionReport CgMax(OraclePtr f, OraclePtr g, const Subset& privacy, double lambda,
                      const OptimizerConfig& config);
SelectionReport CsmiMax(OraclePtr f, OraclePtr g, const Subset& query, const Subset& privacy,
                        double lambda, const OptimizerConfig& config);

// λ g(A) - I_f(A; P) is a difference of submodular functions with no
// approximation guarantee in general. Always throws StructuralError pointing
// at CgMax.
[[noreturn]] SelectionReport NsmiMax(OraclePtr f, OraclePtr g, const Subset& privacy,
                                     double lambda, const OptimizerConfig& config);

// Randomized greedy on I_f(A; Ω\A), with f rescaled so that max_j f(j) <= 1.
// The report carries the scale and the slack k·κ(Â) of the chosen set.
SelectionReport SymmetricMiSelect(OraclePtr f, const OptimizerConfig& config);

// 1 / max_j f(j) when that maximum exceeds 1, else 1.
double SymmetricMiScale(const ValueOracle& f);

}  // namespace subinfo

#endif  // SUBINFO_OPTIMIZE_SUMMARIZATION_H_
