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

#include "subinfo/optimize/summarization.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "subinfo/analysis/curvature.h"
#include "subinfo/core/error.h"
#include "subinfo/core/measures.h"
#include "subinfo/optimize/greedy.h"

namespace subinfo {
namespace {

double Weighted(const OraclePtr& g, double lambda, const Subset& a) {
  return g == nullptr ? 0.0 : lambda * (*g)(a);
}

bool MonotoneSubmodular(const FunctionClaims& c) { return c.monotone && c.submodular; }

FunctionClaims Composite(bool monotone_submodular) {
  return FunctionClaims{true, monotone_submodular, monotone_submodular, false};
}

bool GOk(const OraclePtr& g) { return g == nullptr || MonotoneSubmodular(g->claims()); }

void CheckInputs(const OraclePtr& f, const OraclePtr& g, double lambda,
                 std::initializer_list<const Subset*> sets) {
  if (f == nullptr) throw ArgumentError("missing function f");
  if (g != nullptr && g->ground_size() != f->ground_size()) {
    throw StructuralError("f and g are over different ground sets");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ArgumentError("lambda must be a finite non-negative number");
  }
  for (const Subset* s : sets) {
    if (s->universe_size() != f->ground_size()) {
      throw StructuralError("set " + s->ToString() + " is over a ground set of size " +
                            std::to_string(s->universe_size()) + ", f is over " +
                            std::to_string(f->ground_size()));
    }
  }
}

GuardOutcome GuardComponents(const OraclePtr& f, const OraclePtr& g, bool f_needs_sos,
                             const OptimizerConfig& config) {
  Requirements need_f{.monotone = true, .submodular = true,
                      .second_order_supermodular = f_needs_sos};
  GuardOutcome out = EnforceRequirements(*f, need_f, config.guard, "f", config.threads);
  if (g != nullptr) {
    out = Weakest(out, EnforceRequirements(*g, {.monotone = true, .submodular = true},
                                           config.guard, "g", config.threads));
  }
  return out;
}

SelectionReport RunComposite(std::shared_ptr<const SetFunction> objective, std::string driver,
                             GuardOutcome guard, double lambda, const OptimizerConfig& config) {
  ValueOracle oracle(std::move(objective));
  OptimizerConfig inner = config;
  inner.guard = GuardMode::kUnchecked;
  SelectionReport report = GreedyMax(oracle, inner);
  report.driver = std::move(driver);
  report.guard = guard;
  report.parameters.emplace_back("lambda", lambda);
  return report;
}

}  // namespace

SmiObjective::SmiObjective(OraclePtr f, OraclePtr g, Subset query, double lambda)
    : f_(std::move(f)), g_(std::move(g)), query_(std::move(query)), lambda_(lambda) {
  CheckInputs(f_, g_, lambda_, {&query_});
}

double SmiObjective::Evaluate(const Subset& a) const {
  return MutualInformation(*f_, a, query_) + Weighted(g_, lambda_, a);
}

FunctionClaims SmiObjective::claims() const {
  const FunctionClaims c = f_->claims();
  return Composite(MonotoneSubmodular(c) && c.second_order_supermodular && GOk(g_));
}

CgObjective::CgObjective(OraclePtr f, OraclePtr g, Subset privacy, double lambda)
    : f_(std::move(f)), g_(std::move(g)), privacy_(std::move(privacy)), lambda_(lambda) {
  CheckInputs(f_, g_, lambda_, {&privacy_});
}

double CgObjective::Evaluate(const Subset& a) const {
  return ConditionalGain(*f_, a, privacy_) + Weighted(g_, lambda_, a);
}

FunctionClaims CgObjective::claims() const {
  return Composite(MonotoneSubmodular(f_->claims()) && GOk(g_));
}

CsmiObjective::CsmiObjective(OraclePtr f, OraclePtr g, Subset query, Subset privacy,
                             double lambda)
    : f_(std::move(f)),
      g_(std::move(g)),
      query_(std::move(query)),
      privacy_(std::move(privacy)),
      lambda_(lambda) {
  CheckInputs(f_, g_, lambda_, {&query_, &privacy_});
}

double CsmiObjective::Evaluate(const Subset& a) const {
  return ConditionalMutualInformation(*f_, a, query_, privacy_) + Weighted(g_, lambda_, a);
}

FunctionClaims CsmiObjective::claims() const {
  const FunctionClaims c = f_->claims();
  return Composite(MonotoneSubmodular(c) && c.second_order_supermodular && GOk(g_));
}

SymmetricMiObjective::SymmetricMiObjective(OraclePtr f, double scale)
    : f_(std::move(f)), scale_(scale) {
  if (f_ == nullptr) throw ArgumentError("missing function f");
}

double SymmetricMiObjective::Evaluate(const Subset& a) const {
  return scale_ * MutualInformation(*f_, a, a.Complement());
}

FunctionClaims SymmetricMiObjective::claims() const {
  return FunctionClaims{true, false, f_->claims().submodular, false};
}

SelectionReport SmiMax(OraclePtr f, OraclePtr g, const Subset& query, double lambda,
                       const OptimizerConfig& config) {
  auto objective = std::make_shared<SmiObjective>(f, g, query, lambda);
  const GuardOutcome guard = GuardComponents(f, g, /*f_needs_sos=*/true, config);
  return RunComposite(std::move(objective), "smi_max", guard, lambda, config);
}

SelectionReport CgMax(OraclePtr f, OraclePtr g, const Subset& privacy, double lambda,
                      const OptimizerConfig& config) {
  auto objective = std::make_shared<CgObjective>(f, g, privacy, lambda);
  const GuardOutcome guard = GuardComponents(f, g, /*f_needs_sos=*/false, config);
  return RunComposite(std::move(objective), "cg_max", guard, lambda, config);
}

SelectionReport CsmiMax(OraclePtr f, OraclePtr g, const Subset& query, const Subset& privacy,
                        double lambda, const OptimizerConfig& config) {
  auto objective = std::make_shared<CsmiObjective>(f, g, query, privacy, lambda);
  const GuardOutcome guard = GuardComponents(f, g, /*f_needs_sos=*/true, config);
  return RunComposite(std::move(objective), "csmi_max", guard, lambda, config);
}

SelectionReport NsmiMax(OraclePtr, OraclePtr, const Subset&, double, const OptimizerConfig&) {
  throw StructuralError(
      "nsmi_max maximizes lambda*g(A) - I_f(A; P), a difference of submodular functions "
      "that admits no constant-factor approximation in the worst case; use cg_max, which "
      "optimizes the monotone submodular f(A | P) + lambda*g(A) instead");
}

double SymmetricMiScale(const ValueOracle& f) {
  double top = 0.0;
  for (size_t j = 0; j < f.ground_size(); ++j) {
    top = std::max(top, f(Subset::FromIndices(f.ground_size(), {j})));
  }
  return top > 1.0 ? 1.0 / top : 1.0;
}

SelectionReport SymmetricMiSelect(OraclePtr f, const OptimizerConfig& config) {
  if (f == nullptr) throw ArgumentError("missing function f");
  const GuardOutcome guard = EnforceRequirements(*f, {.monotone = true, .submodular = true},
                                                 config.guard, "f", config.threads);
  const double scale = SymmetricMiScale(*f);
  ValueOracle oracle(std::make_shared<SymmetricMiObjective>(f, scale));
  OptimizerConfig inner = config;
  inner.guard = GuardMode::kUnchecked;
  SelectionReport report = RandomizedGreedyMax(oracle, inner);
  const double kappa = SymmetricCurvatureAt(*f, report.chosen);
  const double k = static_cast<double>(config.budget);
  report.driver = "symmetric_mi";
  report.guard = guard;
  report.guarantee = Guarantee{1.0 - 1.0 / std::exp(1.0), k * kappa, false,
                               "(1 - 1/e)(OPT - k kappa(A*)) on the rescaled objective; "
                               "slack uses kappa at the chosen set, indicative only"};
  report.parameters.emplace_back("scale", scale);
  report.parameters.emplace_back("sym_kappa", kappa);
  return report;
}

}  // namespace subinfo
