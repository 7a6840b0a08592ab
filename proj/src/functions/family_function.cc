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

#include "subinfo/functions/family_function.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "subinfo/core/error.h"

namespace subinfo {
namespace internal {

class FamilyModel {
 public:
  virtual ~FamilyModel() = default;
  virtual double Evaluate(const Subset& a) const = 0;
  virtual FunctionClaims Claims() const = 0;
  virtual std::optional<double> Gain(const Subset& a, const Subset& b) const = 0;
  virtual std::optional<double> Mi(const Subset& a, const Subset& b) const = 0;
  // Called only with k >= 3 sets.
  virtual std::optional<double> Multi(std::span<const Subset>) const { return std::nullopt; }
  virtual std::optional<double> Metric(const Subset& a, const Subset& b) const = 0;
  virtual std::optional<double> Cmi(const Subset&, const Subset&, const Subset&) const {
    return std::nullopt;
  }
};

}  // namespace internal

namespace {

using internal::FamilyModel;

constexpr FunctionClaims kAllClaims{true, true, true, true};

double WeightOf(const std::vector<double>& w, const Subset& s) {
  double total = 0.0;
  s.ForEach([&](size_t i) { total += w[i]; });
  return total;
}

class ModularModel : public FamilyModel {
 public:
  explicit ModularModel(const ModularWeights& p) : w_(p.w) {}
  double Evaluate(const Subset& a) const override { return WeightOf(w_, a); }
  FunctionClaims Claims() const override { return kAllClaims; }
  std::optional<double> Gain(const Subset& a, const Subset& b) const override {
    return WeightOf(w_, a - b);
  }
  std::optional<double> Mi(const Subset& a, const Subset& b) const override {
    return WeightOf(w_, a & b);
  }
  std::optional<double> Multi(std::span<const Subset> sets) const override {
    Subset common = sets[0];
    for (const Subset& s : sets.subspan(1)) common &= s;
    return WeightOf(w_, common);
  }
  std::optional<double> Metric(const Subset& a, const Subset& b) const override {
    return WeightOf(w_, a ^ b);
  }
  std::optional<double> Cmi(const Subset& a, const Subset& b, const Subset& c) const override {
    return WeightOf(w_, (a & b) - c);
  }

 private:
  std::vector<double> w_;
};

class SetCoverModel : public FamilyModel {
 public:
  SetCoverModel(const CoverageMap& p, size_t n) : weights_(p.concept_weights) {
    const size_t m = weights_.size();
    covers_.reserve(n);
    for (size_t a = 0; a < n; ++a) covers_.push_back(Subset::FromIndices(m, p.gamma[a]));
  }
  double Evaluate(const Subset& a) const override { return WeightOf(weights_, Gamma(a)); }
  FunctionClaims Claims() const override { return kAllClaims; }
  std::optional<double> Gain(const Subset& a, const Subset& b) const override {
    return WeightOf(weights_, Gamma(a) - Gamma(b));
  }
  std::optional<double> Mi(const Subset& a, const Subset& b) const override {
    return WeightOf(weights_, Gamma(a) & Gamma(b));
  }
  std::optional<double> Multi(std::span<const Subset> sets) const override {
    Subset common = Gamma(sets[0]);
    for (const Subset& s : sets.subspan(1)) common &= Gamma(s);
    return WeightOf(weights_, common);
  }
  std::optional<double> Metric(const Subset& a, const Subset& b) const override {
    return WeightOf(weights_, Gamma(a) ^ Gamma(b));
  }
  std::optional<double> Cmi(const Subset& a, const Subset& b, const Subset& c) const override {
    return WeightOf(weights_, (Gamma(a) & Gamma(b)) - Gamma(c));
  }

 private:
  Subset Gamma(const Subset& a) const {
    Subset out(weights_.size());
    a.ForEach([&](size_t i) { out |= covers_[i]; });
    return out;
  }

  std::vector<double> weights_;
  std::vector<Subset> covers_;
};

class ProbSetCoverModel : public FamilyModel {
 public:
  explicit ProbSetCoverModel(const ProbCoverageMatrix& p) : p_(p.p), weights_(p.concept_weights) {}

  double Evaluate(const Subset& a) const override {
    const std::vector<double> pa = Miss(a);
    double total = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) total += weights_[i] * (1.0 - pa[i]);
    return total;
  }
  FunctionClaims Claims() const override { return kAllClaims; }
  std::optional<double> Gain(const Subset& a, const Subset& b) const override {
    const std::vector<double> pb = Miss(b);
    const std::vector<double> pd = Miss(a - b);
    double total = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) total += weights_[i] * pb[i] * (1.0 - pd[i]);
    return total;
  }
  std::optional<double> Mi(const Subset& a, const Subset& b) const override {
    const std::vector<double> pa = Miss(a);
    const std::vector<double> pb = Miss(b);
    const std::vector<double> pu = Miss(a | b);
    double total = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) {
      total += weights_[i] * (1.0 - (pa[i] + pb[i] - pu[i]));
    }
    return total;
  }
  std::optional<double> Multi(std::span<const Subset> sets) const override {
    RequirePairwiseDisjoint(sets, "multi-set mutual information");
    std::vector<double> prod(weights_.size(), 1.0);
    for (const Subset& s : sets) {
      const std::vector<double> ps = Miss(s);
      for (size_t i = 0; i < prod.size(); ++i) prod[i] *= 1.0 - ps[i];
    }
    double total = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) total += weights_[i] * prod[i];
    return total;
  }
  std::optional<double> Metric(const Subset& a, const Subset& b) const override {
    const std::vector<double> pa = Miss(a);
    const std::vector<double> pb = Miss(b);
    const std::vector<double> pab = Miss(a - b);
    const std::vector<double> pba = Miss(b - a);
    double total = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) {
      total += weights_[i] * (pb[i] * (1.0 - pab[i]) + pa[i] * (1.0 - pba[i]));
    }
    return total;
  }
  std::optional<double> Cmi(const Subset& a, const Subset& b, const Subset& c) const override {
    const Subset sets[] = {a, b, c};
    RequirePairwiseDisjoint(sets, "conditional mutual information");
    const std::vector<double> pa = Miss(a);
    const std::vector<double> pb = Miss(b);
    const std::vector<double> pc = Miss(c);
    double total = 0.0;
    for (size_t i = 0; i < weights_.size(); ++i) {
      total += weights_[i] * (1.0 - pa[i]) * (1.0 - pb[i]) * pc[i];
    }
    return total;
  }

 private:
  static void RequirePairwiseDisjoint(std::span<const Subset> sets, const std::string& what) {
    for (size_t x = 0; x < sets.size(); ++x) {
      for (size_t y = x + 1; y < sets.size(); ++y) {
        if (!sets[x].IsDisjointFrom(sets[y])) {
          throw PreconditionError("prob_set_cover: closed-form " + what +
                                  " needs pairwise-disjoint sets; " + sets[x].ToString() +
                                  " and " + sets[y].ToString() + " overlap");
        }
      }
    }
  }

  // P_i(A) for every concept i.
  std::vector<double> Miss(const Subset& a) const {
    const size_t m = weights_.size();
    std::vector<double> out(m, 1.0);
    for (size_t i = 0; i < m; ++i) {
      bool near_one = false;
      a.ForEach([&](size_t e) { near_one = near_one || p_[e][i] > 1.0 - 1e-12; });
      if (near_one) {
        double log_sum = 0.0;
        a.ForEach([&](size_t e) { log_sum += std::log1p(-p_[e][i]); });
        out[i] = std::exp(log_sum);
      } else {
        a.ForEach([&](size_t e) { out[i] *= 1.0 - p_[e][i]; });
      }
    }
    return out;
  }

  std::vector<std::vector<double>> p_;
  std::vector<double> weights_;
};

class FacilityLocationModel : public FamilyModel {
 public:
  explicit FacilityLocationModel(const FacilityLocationParams& p) : s_(p.kernel.s) {}

  double Evaluate(const Subset& a) const override {
    const std::vector<double> ma = Best(a);
    double total = 0.0;
    for (double v : ma) total += v;
    return total;
  }
  FunctionClaims Claims() const override { return kAllClaims; }
  std::optional<double> Gain(const Subset& a, const Subset& b) const override {
    const std::vector<double> ma = Best(a);
    const std::vector<double> mb = Best(b);
    double total = 0.0;
    for (size_t i = 0; i < ma.size(); ++i) total += std::max(0.0, ma[i] - mb[i]);
    return total;
  }
  std::optional<double> Mi(const Subset& a, const Subset& b) const override {
    const std::vector<double> ma = Best(a);
    const std::vector<double> mb = Best(b);
    double total = 0.0;
    for (size_t i = 0; i < ma.size(); ++i) total += std::min(ma[i], mb[i]);
    return total;
  }
  std::optional<double> Multi(std::span<const Subset> sets) const override {
    std::vector<double> low = Best(sets[0]);
    for (const Subset& s : sets.subspan(1)) {
      const std::vector<double> ms = Best(s);
      for (size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], ms[i]);
    }
    double total = 0.0;
    for (double v : low) total += v;
    return total;
  }
  std::optional<double> Metric(const Subset& a, const Subset& b) const override {
    const std::vector<double> ma = Best(a);
    const std::vector<double> mb = Best(b);
    double total = 0.0;
    for (size_t i = 0; i < ma.size(); ++i) total += std::abs(ma[i] - mb[i]);
    return total;
  }
  std::optional<double> Cmi(const Subset& a, const Subset& b, const Subset& c) const override {
    const std::vector<double> ma = Best(a);
    const std::vector<double> mb = Best(b);
    const std::vector<double> mc = Best(c);
    double total = 0.0;
    for (size_t i = 0; i < ma.size(); ++i) {
      total += std::max(0.0, std::min(ma[i], mb[i]) - mc[i]);
    }
    return total;
  }

 private:
  // max_{a∈A} s_ia per row i; 0 for the empty set.
  std::vector<double> Best(const Subset& a) const {
    std::vector<double> out(s_.size(), 0.0);
    for (size_t i = 0; i < s_.size(); ++i) {
      a.ForEach([&](size_t e) { out[i] = std::max(out[i], s_[i][e]); });
    }
    return out;
  }

  std::vector<std::vector<double>> s_;
};

class GraphCutModel : public FamilyModel {
 public:
  explicit GraphCutModel(const GraphCutParams& p) : s_(p.kernel.s), lambda_(p.lambda_gc) {
    const size_t n = s_.size();
    row_sum_.assign(n, 0.0);
    for (size_t a = 0; a < n; ++a) {
      for (size_t i = 0; i < n; ++i) row_sum_[a] += s_[i][a];
    }
  }

  double Evaluate(const Subset& a) const override {
    return lambda_ * WeightOf(row_sum_, a) - Cross(a, a);
  }
  FunctionClaims Claims() const override { return kAllClaims; }
  std::optional<double> Gain(const Subset& a, const Subset& b) const override {
    const Subset d = a - b;
    return Evaluate(d) - 2.0 * Cross(d, b);
  }
  std::optional<double> Mi(const Subset& a, const Subset& b) const override {
    const Subset both = a & b;
    return Evaluate(both) + 2.0 * Cross(a, b) - 2.0 * Cross(a | b, both);
  }
  std::optional<double> Metric(const Subset& a, const Subset& b) const override {
    return *Gain(a, b) + *Gain(b, a);
  }

 private:
  double Cross(const Subset& x, const Subset& y) const {
    double total = 0.0;
    x.ForEach([&](size_t i) { y.ForEach([&](size_t j) { total += s_[i][j]; }); });
    return total;
  }

  std::vector<std::vector<double>> s_;
  double lambda_;
  std::vector<double> row_sum_;
};

// Families of the form h(m(A)) with h concave and m modular; every measure is
// a function of m on unions.
class ConcaveOfModularModel : public FamilyModel {
 public:
  ConcaveOfModularModel(std::vector<double> w, double exponent, double cap,
                        FunctionClaims claims)
      : w_(std::move(w)), exponent_(exponent), cap_(cap), claims_(claims) {}

  double Evaluate(const Subset& a) const override { return H(a); }
  FunctionClaims Claims() const override { return claims_; }
  std::optional<double> Gain(const Subset& a, const Subset& b) const override {
    return H(a | b) - H(b);
  }
  std::optional<double> Mi(const Subset& a, const Subset& b) const override {
    return H(a) + H(b) - H(a | b);
  }
  std::optional<double> Metric(const Subset& a, const Subset& b) const override {
    const double u = H(a | b);
    return (u - H(a)) + (u - H(b));
  }

 private:
  double H(const Subset& a) const {
    const double m = w_.empty() ? static_cast<double>(a.count()) : WeightOf(w_, a);
    if (cap_ > 0.0) return std::min(m, cap_);
    return exponent_ == 1.0 ? m : std::pow(m, exponent_);
  }

  std::vector<double> w_;
  double exponent_;
  double cap_;
  FunctionClaims claims_;
};

std::unique_ptr<const FamilyModel> Compile(const FunctionSpec& spec);

class MixtureModel : public FamilyModel {
 public:
  explicit MixtureModel(const Mixture& p) : coefficients_(p.coefficients) {
    for (const FunctionSpec& c : p.components) parts_.push_back(Compile(c));
  }

  double Evaluate(const Subset& a) const override {
    double total = 0.0;
    for (size_t j = 0; j < parts_.size(); ++j) {
      total += coefficients_[j] * parts_[j]->Evaluate(a);
    }
    return total;
  }
  FunctionClaims Claims() const override {
    FunctionClaims out = kAllClaims;
    for (const auto& part : parts_) {
      const FunctionClaims c = part->Claims();
      out.normalized = out.normalized && c.normalized;
      out.monotone = out.monotone && c.monotone;
      out.submodular = out.submodular && c.submodular;
      out.second_order_supermodular =
          out.second_order_supermodular && c.second_order_supermodular;
    }
    return out;
  }
  std::optional<double> Gain(const Subset& a, const Subset& b) const override {
    return Sum([&](const FamilyModel& m) { return m.Gain(a, b); });
  }
  std::optional<double> Mi(const Subset& a, const Subset& b) const override {
    return Sum([&](const FamilyModel& m) { return m.Mi(a, b); });
  }
  std::optional<double> Multi(std::span<const Subset> sets) const override {
    return Sum([&](const FamilyModel& m) { return m.Multi(sets); });
  }
  std::optional<double> Metric(const Subset& a, const Subset& b) const override {
    return Sum([&](const FamilyModel& m) { return m.Metric(a, b); });
  }
  std::optional<double> Cmi(const Subset& a, const Subset& b, const Subset& c) const override {
    return Sum([&](const FamilyModel& m) { return m.Cmi(a, b, c); });
  }

 private:
  template <typename Fn>
  std::optional<double> Sum(Fn&& fn) const {
    double total = 0.0;
    for (size_t j = 0; j < parts_.size(); ++j) {
      const std::optional<double> v = fn(*parts_[j]);
      if (!v.has_value()) return std::nullopt;
      total += coefficients_[j] * *v;
    }
    return total;
  }

  std::vector<double> coefficients_;
  std::vector<std::unique_ptr<const FamilyModel>> parts_;
};

std::unique_ptr<const FamilyModel> Compile(const FunctionSpec& spec) {
  const size_t n = spec.ground_size;
  switch (spec.family()) {
    case Family::kModular:
      return std::make_unique<ModularModel>(std::get<ModularWeights>(spec.params));
    case Family::kSetCover:
      return std::make_unique<SetCoverModel>(std::get<CoverageMap>(spec.params), n);
    case Family::kProbSetCover:
      return std::make_unique<ProbSetCoverModel>(std::get<ProbCoverageMatrix>(spec.params));
    case Family::kFacilityLocation:
      return std::make_unique<FacilityLocationModel>(
          std::get<FacilityLocationParams>(spec.params));
    case Family::kGraphCut:
      return std::make_unique<GraphCutModel>(std::get<GraphCutParams>(spec.params));
    case Family::kTruncation: {
      const size_t cap = std::get<TruncationRank>(spec.params).cap;
      // f2 first turns positive going from |A| = cap - 2 to cap - 1, which
      // needs cap >= 2 and three free elements past A.
      FunctionClaims claims = kAllClaims;
      claims.second_order_supermodular = !(cap >= 2 && cap + 1 <= n);
      return std::make_unique<ConcaveOfModularModel>(std::vector<double>{}, 1.0,
                                                     static_cast<double>(cap), claims);
    }
    case Family::kConcavePower: {
      const auto& p = std::get<ConcavePowerModular>(spec.params);
      return std::make_unique<ConcaveOfModularModel>(p.w, p.exponent, 0.0, kAllClaims);
    }
    case Family::kMixture:
      return std::make_unique<MixtureModel>(std::get<Mixture>(spec.params));
  }
  throw ArgumentError("unknown function family");
}

void RequireArity(const MeasureRequest& r, size_t exact) {
  if (r.sets.size() != exact) {
    throw ArgumentError(MeasureKindName(r.kind) + " takes " + std::to_string(exact) +
                        " sets, got " + std::to_string(r.sets.size()));
  }
}

}  // namespace

FamilyFunction::FamilyFunction(FunctionSpec spec) : spec_(std::move(spec)) {
  ValidateSpec(spec_);
  model_ = Compile(spec_);
}

FamilyFunction::~FamilyFunction() = default;

void FamilyFunction::CheckOperand(const Subset& s) const {
  if (s.universe_size() != spec_.ground_size) {
    throw StructuralError("operand " + s.ToString() + " is over a ground set of size " +
                          std::to_string(s.universe_size()) + ", function is over " +
                          std::to_string(spec_.ground_size));
  }
}

double FamilyFunction::Evaluate(const Subset& a) const {
  CheckOperand(a);
  return model_->Evaluate(a);
}

FunctionClaims FamilyFunction::claims() const { return model_->Claims(); }

std::optional<double> FamilyFunction::ClosedFormConditionalGain(const Subset& a,
                                                                const Subset& b) const {
  CheckOperand(a);
  CheckOperand(b);
  return model_->Gain(a, b);
}

std::optional<double> FamilyFunction::ClosedFormMutualInformation(const Subset& a,
                                                                  const Subset& b) const {
  CheckOperand(a);
  CheckOperand(b);
  return model_->Mi(a, b);
}

std::optional<double> FamilyFunction::ClosedFormMultisetMi(std::span<const Subset> sets) const {
  if (sets.empty()) throw ArgumentError("multi-set mutual information needs at least one set");
  for (const Subset& s : sets) CheckOperand(s);
  if (sets.size() == 1) return model_->Evaluate(sets[0]);
  if (sets.size() == 2) return model_->Mi(sets[0], sets[1]);
  return model_->Multi(sets);
}

std::optional<double> FamilyFunction::ClosedFormMetric(const Subset& a, const Subset& b) const {
  CheckOperand(a);
  CheckOperand(b);
  return model_->Metric(a, b);
}

std::optional<double> FamilyFunction::ClosedFormConditionalMi(const Subset& a, const Subset& b,
                                                              const Subset& c) const {
  CheckOperand(a);
  CheckOperand(b);
  CheckOperand(c);
  return model_->Cmi(a, b, c);
}

std::optional<MeasureResult> FamilyFunction::ClosedFormMeasure(
    const MeasureRequest& request) const {
  const bool takes_condition =
      request.kind == MeasureKind::kCMI || request.kind == MeasureKind::kCondTotalCorr ||
      request.kind == MeasureKind::kMultiMI;
  if (request.condition.has_value() && !takes_condition) {
    throw ArgumentError(MeasureKindName(request.kind) + " does not take a conditioning set");
  }
  std::optional<double> value;
  switch (request.kind) {
    case MeasureKind::kInfo:
      RequireArity(request, 1);
      value = Evaluate(request.sets[0]);
      break;
    case MeasureKind::kCondGain:
      RequireArity(request, 2);
      value = ClosedFormConditionalGain(request.sets[0], request.sets[1]);
      break;
    case MeasureKind::kMI:
      RequireArity(request, 2);
      value = ClosedFormMutualInformation(request.sets[0], request.sets[1]);
      break;
    case MeasureKind::kCMI:
      RequireArity(request, 2);
      if (!request.condition.has_value()) {
        throw ArgumentError("cmi requires a conditioning set");
      }
      value = ClosedFormConditionalMi(request.sets[0], request.sets[1], *request.condition);
      break;
    case MeasureKind::kMultiMI:
      if (request.condition.has_value()) return std::nullopt;
      value = ClosedFormMultisetMi(request.sets);
      break;
    case MeasureKind::kTotalCorr:
    case MeasureKind::kCondTotalCorr:
      return std::nullopt;
    case MeasureKind::kVarInfo:
      RequireArity(request, 2);
      value = ClosedFormMetric(request.sets[0], request.sets[1]);
      break;
  }
  if (!value.has_value()) return std::nullopt;
  MeasureResult result;
  result.value = *value;
  result.measure = request.kind;
  result.oracle_calls = 0;
  result.path = ComputePath::kClosedForm;
  return result;
}

std::shared_ptr<const FamilyFunction> MakeFunction(FunctionSpec spec) {
  return std::make_shared<const FamilyFunction>(std::move(spec));
}

double EvaluateSpec(const FunctionSpec& spec, const Subset& a) {
  return FamilyFunction(spec).Evaluate(a);
}

double ClosedFormConditionalMiProbCover(const FunctionSpec& spec, const Subset& a,
                                        const Subset& b, const Subset& c) {
  if (spec.family() != Family::kProbSetCover) {
    throw ArgumentError("expected a prob_set_cover function, got " +
                        FamilyName(spec.family()));
  }
  return *FamilyFunction(spec).ClosedFormConditionalMi(a, b, c);
}

}  // namespace subinfo
