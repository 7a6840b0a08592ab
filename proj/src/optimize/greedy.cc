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

#include "subinfo/optimize/greedy.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "subinfo/core/error.h"
#include "subinfo/core/parallel.h"
#include "subinfo/core/random.h"

namespace subinfo {
namespace {

void CheckBudget(const ValueOracle& f, const OptimizerConfig& config) {
  if (config.budget == 0 || config.budget > f.ground_size()) {
    throw ArgumentError("budget " + std::to_string(config.budget) + " must lie in [1, " +
                        std::to_string(f.ground_size()) + "]");
  }
}

// Marginal gains of every candidate against `current`, in candidate order.
std::vector<double> Gains(const ValueOracle& f, const Subset& current, double base,
                          const std::vector<size_t>& candidates, size_t threads) {
  std::vector<double> gains(candidates.size());
  const size_t chunks = std::min<size_t>(candidates.size(), 64);
  ParallelChunks(candidates.size(), chunks, threads, [&](size_t, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) gains[i] = f(current.With(candidates[i])) - base;
  });
  return gains;
}

struct Bound {
  double gain;
  size_t element;
  size_t stamp;
};

struct BoundOrder {
  bool operator()(const Bound& a, const Bound& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.element > b.element;
  }
};

}  // namespace

SelectionReport GreedyMax(const ValueOracle& objective, const OptimizerConfig& config) {
  CheckBudget(objective, config);
  SelectionReport report;
  report.driver = "greedy";
  report.guard = EnforceRequirements(objective, {.monotone = true, .submodular = true},
                                     config.guard, "objective", config.threads);
  const uint64_t calls_before = objective.evaluations();
  const size_t n = objective.ground_size();
  Subset chosen(n);
  double value = objective(chosen);

  if (config.lazy) {
    std::priority_queue<Bound, std::vector<Bound>, BoundOrder> heap;
    for (size_t j = 0; j < n; ++j) {
      heap.push({objective(chosen.With(j)) - value, j, 0});
    }
    size_t step = 0;
    while (step < config.budget && !heap.empty()) {
      Bound top = heap.top();
      heap.pop();
      if (top.stamp != step) {
        top.gain = objective(chosen.With(top.element)) - value;
        top.stamp = step;
        heap.push(top);
        continue;
      }
      if (top.gain <= kPositiveGain) break;
      chosen.insert(top.element);
      value = objective(chosen);
      report.gain_trace.push_back({top.element, top.gain});
      ++step;
    }
  } else {
    std::vector<size_t> remaining(n);
    for (size_t j = 0; j < n; ++j) remaining[j] = j;
    for (size_t step = 0; step < config.budget && !remaining.empty(); ++step) {
      const std::vector<double> gains = Gains(objective, chosen, value, remaining, config.threads);
      size_t best = 0;
      for (size_t i = 1; i < gains.size(); ++i) {
        if (gains[i] > gains[best]) best = i;
      }
      if (gains[best] <= kPositiveGain) break;
      chosen.insert(remaining[best]);
      value = objective(chosen);
      report.gain_trace.push_back({remaining[best], gains[best]});
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
  }

  report.chosen = chosen;
  report.objective_value = value;
  report.oracle_calls = objective.evaluations() - calls_before;
  report.seed = config.seed;
  report.guarantee = Guarantee{1.0 - 1.0 / std::exp(1.0), 0.0, false,
                               "(1 - 1/e) OPT for a monotone submodular objective"};
  return report;
}

SelectionReport RandomizedGreedyMax(const ValueOracle& objective, const OptimizerConfig& config) {
  CheckBudget(objective, config);
  SelectionReport report;
  report.driver = "randomized_greedy";
  report.guard = EnforceRequirements(objective, {.submodular = true}, config.guard, "objective",
                                     config.threads);
  const uint64_t calls_before = objective.evaluations();
  const size_t n = objective.ground_size();
  const size_t k = config.budget;
  std::mt19937_64 rng(config.seed);
  Subset chosen(n);
  double value = objective(chosen);

  for (size_t step = 0; step < k; ++step) {
    std::vector<size_t> remaining;
    for (size_t j = 0; j < n; ++j) {
      if (!chosen.contains(j)) remaining.push_back(j);
    }
    const std::vector<double> gains = Gains(objective, chosen, value, remaining, config.threads);
    std::vector<size_t> order;
    for (size_t i = 0; i < remaining.size(); ++i) {
      if (gains[i] > kPositiveGain) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return gains[a] > gains[b]; });
    if (order.size() > k) order.resize(k);
    // Slots past order.size() are dummies.
    const uint64_t slot = UniformIndex(rng, k);
    if (slot >= order.size()) {
      report.gain_trace.push_back({std::nullopt, 0.0});
      continue;
    }
    const size_t pick = order[slot];
    chosen.insert(remaining[pick]);
    value = objective(chosen);
    report.gain_trace.push_back({remaining[pick], gains[pick]});
  }

  report.chosen = chosen;
  report.objective_value = value;
  report.oracle_calls = objective.evaluations() - calls_before;
  report.seed = config.seed;
  report.guarantee = Guarantee{1.0 / std::exp(1.0), 0.0, false,
                               "OPT / e in expectation for a submodular objective"};
  return report;
}

}  // namespace subinfo
