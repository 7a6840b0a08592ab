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

#include "subinfo/optimize/metric.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "subinfo/analysis/brute_force.h"
#include "subinfo/analysis/curvature.h"
#include "subinfo/analysis/table.h"
#include "subinfo/core/error.h"

namespace subinfo {

std::string MetricModeName(MetricMode m) {
  return m == MetricMode::kExact ? "exact" : "surrogate";
}

SelectionReport MinimizeMetricSum(const ValueOracle& f, std::span<const Subset> anchors,
                                  MetricMode mode, const OptimizerConfig& config) {
  const size_t n = f.ground_size();
  if (n > kMaxBruteForceGround) {
    throw ResourceError("metric-sum minimization over " + std::to_string(n) +
                        " elements exceeds the limit of " +
                        std::to_string(kMaxBruteForceGround));
  }
  if (anchors.empty()) throw ArgumentError("metric-sum minimization needs at least one anchor");
  for (const Subset& s : anchors) {
    if (s.universe_size() != n) {
      throw StructuralError("anchor " + s.ToString() + " is over a ground set of size " +
                            std::to_string(s.universe_size()));
    }
  }
  SelectionReport report;
  report.driver = "metric_min_" + MetricModeName(mode);
  report.guard = EnforceRequirements(f, {.monotone = true, .submodular = true}, config.guard,
                                     "f", config.threads);
  const uint64_t calls_before = f.evaluations();
  const std::vector<double> t = TabulateAll(f, kMaxBruteForceGround, config.threads);
  auto true_sum = [&](uint64_t m) {
    double total = 0.0;
    for (const Subset& s : anchors) {
      const double u = t[m | s.mask()];
      total += (u - t[m]) + (u - t[s.mask()]);
    }
    return total;
  };

  uint64_t best = 0;
  if (mode == MetricMode::kExact) {
    const BruteForceResult r = BruteForceMinMetricSum(f, anchors, config.threads);
    best = r.set.mask();
  } else {
    double best_value = std::numeric_limits<double>::infinity();
    for (uint64_t m = 0; m < t.size(); ++m) {
      double total = 0.0;
      for (const Subset& s : anchors) {
        total += t[m & ~s.mask()] + t[s.mask() & ~m];
      }
      if (total < best_value) {
        best_value = total;
        best = m;
      }
    }
    report.parameters.emplace_back("surrogate_value", best_value);
  }

  report.chosen = Subset::FromMask(n, best);
  report.objective_value = true_sum(best);
  report.seed = config.seed;
  if (mode == MetricMode::kExact) {
    report.guarantee = Guarantee{1.0, 0.0, false, "exact minimum"};
  } else {
    double kappa = 1.0;
    try {
      kappa = Curvature(f);
    } catch (const DegenerateError&) {
      // f ≡ 0: every set is optimal, the surrogate included.
      kappa = 0.0;
    }
    report.parameters.emplace_back("kappa", kappa);
    const bool vacuous = kappa >= 1.0 - 1e-12;
    report.guarantee =
        Guarantee{vacuous ? std::numeric_limits<double>::infinity() : 1.0 / (1.0 - kappa), 0.0,
                  vacuous,
                  vacuous ? "curvature is 1, the surrogate carries no guarantee"
                          : "at most OPT / (1 - kappa_f)"};
  }
  report.oracle_calls = f.evaluations() - calls_before;
  return report;
}

}  // namespace subinfo
