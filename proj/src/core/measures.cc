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

#include "subinfo/core/measures.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "subinfo/core/error.h"

namespace subinfo {

namespace {

// Routes every evaluation through the oracle, optionally under a condition C
// (g(X) = f(X ∪ C) - f(C)), and records the distinct subsets it touched.
class Evaluator {
 public:
  Evaluator(const ValueOracle& f, const Subset* condition) : f_(f), condition_(condition) {
    if (condition_ != nullptr) condition_value_ = Raw(*condition_);
  }

  double operator()(const Subset& x) {
    if (condition_ == nullptr) return Raw(x);
    return Raw(x | *condition_) - condition_value_;
  }

  uint64_t distinct() const { return seen_.size(); }

 private:
  double Raw(const Subset& x) {
    auto it = seen_.find(x);
    if (it != seen_.end()) return it->second;
    const double v = f_(x);
    seen_.emplace(x, v);
    return v;
  }

  const ValueOracle& f_;
  const Subset* condition_;
  double condition_value_ = 0.0;
  std::unordered_map<Subset, double, SubsetHash> seen_;
};

void CheckGround(const ValueOracle& f, const Subset& s) {
  if (s.universe_size() != f.ground_size()) {
    throw StructuralError("operand " + s.ToString() + " is over a ground set of size " +
                          std::to_string(s.universe_size()) + ", function has " +
                          std::to_string(f.ground_size()));
  }
}

void CheckGround(const ValueOracle& f, std::span<const Subset> sets) {
  for (const Subset& s : sets) CheckGround(f, s);
}

std::vector<Subset> Sorted(std::span<const Subset> sets) {
  std::vector<Subset> out(sets.begin(), sets.end());
  std::sort(out.begin(), out.end());
  return out;
}

double Gain(Evaluator& g, const Subset& a, const Subset& b) { return g(a | b) - g(b); }

// Operands are ordered so that x <= y by mask. When x ⊆ y the bracketed term
// cancels exactly, so I(A; Q) = g(A) bit-for-bit whenever A ⊆ Q.
double Mi(Evaluator& g, const Subset& a, const Subset& b) {
  const bool ordered = a <= b;
  const Subset& x = ordered ? a : b;
  const Subset& y = ordered ? b : a;
  return g(x) + (g(y) - g(x | y));
}

double Multiset(Evaluator& g, std::span<const Subset> sets) {
  const size_t k = sets.size();
  if (k == 0) throw ArgumentError("multi-set mutual information needs at least one set");
  if (k > kMaxGenericMultisetArity) {
    throw ResourceError("generic multi-set mutual information supports at most " +
                        std::to_string(kMaxGenericMultisetArity) + " sets, got " +
                        std::to_string(k));
  }
  if (k == 1) return g(sets[0]);
  if (k == 2) return Mi(g, sets[0], sets[1]);

  const std::vector<Subset> sorted = Sorted(sets);
  const size_t n = sorted[0].universe_size();
  // Gray-code walk over T ⊆ [k]: one set enters or leaves per step and the
  // union is maintained through per-element multiplicities.
  std::vector<uint32_t> multiplicity(n, 0);
  Subset current(n);
  double total = 0.0;
  const uint64_t steps = uint64_t{1} << k;
  for (uint64_t step = 1; step < steps; ++step) {
    const uint64_t gray = step ^ (step >> 1);
    const size_t flipped = static_cast<size_t>(std::countr_zero(step));
    const bool entering = (gray >> flipped) & 1;
    sorted[flipped].ForEach([&](size_t e) {
      if (entering) {
        if (multiplicity[e]++ == 0) current.insert(e);
      } else {
        if (--multiplicity[e] == 0) current.erase(e);
      }
    });
    const double value = g(current);
    if (std::popcount(gray) % 2 == 1) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total;
}

double TotalCorr(Evaluator& g, std::span<const Subset> sets) {
  const size_t k = sets.size();
  if (k == 0) throw ArgumentError("total correlation needs at least one set");
  if (k == 2) return Mi(g, sets[0], sets[1]);
  const std::vector<Subset> sorted = Sorted(sets);
  Subset all(sorted[0].universe_size());
  double sum = 0.0;
  for (const Subset& s : sorted) {
    sum += g(s);
    all |= s;
  }
  return sum - g(all);
}

double VarInfo(Evaluator& g, const Subset& a, const Subset& b) {
  const bool ordered = a <= b;
  const Subset& x = ordered ? a : b;
  const Subset& y = ordered ? b : a;
  const double u = g(x | y);
  return (u - g(x)) + (u - g(y));
}

}  // namespace

double ConditionalGain(const ValueOracle& f, const Subset& a, const Subset& b) {
  CheckGround(f, a);
  CheckGround(f, b);
  Evaluator g(f, nullptr);
  return Gain(g, a, b);
}

double MutualInformation(const ValueOracle& f, const Subset& a, const Subset& b) {
  CheckGround(f, a);
  CheckGround(f, b);
  Evaluator g(f, nullptr);
  return Mi(g, a, b);
}

double ConditionalMutualInformation(const ValueOracle& f, const Subset& a, const Subset& b,
                                    const Subset& c) {
  CheckGround(f, a);
  CheckGround(f, b);
  CheckGround(f, c);
  Evaluator g(f, &c);
  return Mi(g, a, b);
}

double MultisetMutualInformation(const ValueOracle& f, std::span<const Subset> sets) {
  CheckGround(f, sets);
  Evaluator g(f, nullptr);
  return Multiset(g, sets);
}

double ConditionalMultisetMutualInformation(const ValueOracle& f, std::span<const Subset> sets,
                                            const Subset& c) {
  CheckGround(f, sets);
  CheckGround(f, c);
  Evaluator g(f, &c);
  return Multiset(g, sets);
}

double TotalCorrelation(const ValueOracle& f, std::span<const Subset> sets) {
  CheckGround(f, sets);
  Evaluator g(f, nullptr);
  return TotalCorr(g, sets);
}

double ConditionalTotalCorrelation(const ValueOracle& f, std::span<const Subset> sets,
                                   const Subset& c) {
  CheckGround(f, sets);
  CheckGround(f, c);
  Evaluator g(f, &c);
  return TotalCorr(g, sets);
}

double VariationOfInformation(const ValueOracle& f, const Subset& a, const Subset& b) {
  CheckGround(f, a);
  CheckGround(f, b);
  Evaluator g(f, nullptr);
  return VarInfo(g, a, b);
}

bool IsIndependent(const ValueOracle& f, const Subset& a, const Subset& b, double tol) {
  if (!(tol >= 0.0)) throw ArgumentError("independence tolerance must be non-negative");
  return std::abs(MutualInformation(f, a, b)) <= tol;
}

std::string MeasureKindName(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kInfo: return "info";
    case MeasureKind::kCondGain: return "cond_gain";
    case MeasureKind::kMI: return "mi";
    case MeasureKind::kCMI: return "cmi";
    case MeasureKind::kMultiMI: return "multi_mi";
    case MeasureKind::kTotalCorr: return "total_corr";
    case MeasureKind::kCondTotalCorr: return "cond_total_corr";
    case MeasureKind::kVarInfo: return "var_info";
  }
  return "unknown";
}

std::optional<MeasureKind> ParseMeasureKind(const std::string& name) {
  for (MeasureKind k : {MeasureKind::kInfo, MeasureKind::kCondGain, MeasureKind::kMI,
                        MeasureKind::kCMI, MeasureKind::kMultiMI, MeasureKind::kTotalCorr,
                        MeasureKind::kCondTotalCorr, MeasureKind::kVarInfo}) {
    if (MeasureKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string ComputePathName(ComputePath path) {
  return path == ComputePath::kGeneric ? "generic" : "closed_form";
}

namespace {

void RequireArity(const MeasureRequest& r, size_t exact) {
  if (r.sets.size() != exact) {
    throw ArgumentError(MeasureKindName(r.kind) + " takes " + std::to_string(exact) +
                        " sets, got " + std::to_string(r.sets.size()));
  }
}

void RequireCondition(const MeasureRequest& r) {
  if (!r.condition.has_value()) {
    throw ArgumentError(MeasureKindName(r.kind) + " requires a conditioning set");
  }
}

}  // namespace

MeasureResult ComputeMeasure(const ValueOracle& f, const MeasureRequest& request) {
  CheckGround(f, request.sets);
  if (request.condition) CheckGround(f, *request.condition);

  const bool conditional =
      request.kind == MeasureKind::kCMI || request.kind == MeasureKind::kCondTotalCorr ||
      (request.kind == MeasureKind::kMultiMI && request.condition.has_value());
  if (conditional) RequireCondition(request);
  if (!conditional && request.condition.has_value()) {
    throw ArgumentError(MeasureKindName(request.kind) + " does not take a conditioning set");
  }
  Evaluator g(f, conditional ? &*request.condition : nullptr);

  MeasureResult result;
  result.measure = request.kind;
  result.path = ComputePath::kGeneric;
  switch (request.kind) {
    case MeasureKind::kInfo:
      RequireArity(request, 1);
      result.value = g(request.sets[0]);
      break;
    case MeasureKind::kCondGain:
      RequireArity(request, 2);
      result.value = Gain(g, request.sets[0], request.sets[1]);
      break;
    case MeasureKind::kMI:
    case MeasureKind::kCMI:
      RequireArity(request, 2);
      result.value = Mi(g, request.sets[0], request.sets[1]);
      break;
    case MeasureKind::kMultiMI:
      result.value = Multiset(g, request.sets);
      break;
    case MeasureKind::kTotalCorr:
    case MeasureKind::kCondTotalCorr:
      result.value = TotalCorr(g, request.sets);
      break;
    case MeasureKind::kVarInfo:
      RequireArity(request, 2);
      result.value = VarInfo(g, request.sets[0], request.sets[1]);
      break;
  }
  result.oracle_calls = g.distinct();
  return result;
}

}  // namespace subinfo
