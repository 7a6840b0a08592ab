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

#include "subinfo/optimize/partition.h"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subinfo/core/error.h"
#include "subinfo/core/measures.h"
#include "subinfo/core/random.h"
#include "subinfo/functions/family_function.h"
#include "subinfo/optimize/greedy.h"

namespace subinfo {
namespace {

void CheckParts(const ValueOracle& f, size_t k_parts) {
  if (k_parts < 2 || k_parts > f.ground_size()) {
    throw ArgumentError("number of blocks " + std::to_string(k_parts) + " must lie in [2, " +
                        std::to_string(f.ground_size()) + "]");
  }
}

std::vector<size_t> SeededOrder(size_t n, uint64_t seed) {
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  Shuffle(order, rng);
  return order;
}

}  // namespace

PartitionReport PartitionTotalCorrelation(const ValueOracle& f, size_t k_parts,
                                          Direction direction, const OptimizerConfig& config) {
  CheckParts(f, k_parts);
  PartitionReport report;
  report.guard = EnforceRequirements(f, {.monotone = true, .submodular = true}, config.guard,
                                     "f", config.threads);
  const uint64_t calls_before = f.evaluations();
  const size_t n = f.ground_size();
  std::vector<Subset> blocks(k_parts, Subset(n));
  std::vector<double> values(k_parts, 0.0);
  const std::vector<size_t> order = SeededOrder(n, config.seed);

  size_t start = 0;
  if (direction == Direction::kMin) {
    for (; start < k_parts; ++start) {
      blocks[start].insert(order[start]);
      values[start] = f(blocks[start]);
    }
  }
  for (size_t pos = start; pos < n; ++pos) {
    const size_t j = order[pos];
    size_t best = 0;
    double best_gain = 0.0;
    for (size_t b = 0; b < k_parts; ++b) {
      const double gain = f(blocks[b].With(j)) - values[b];
      const bool better = direction == Direction::kMax ? gain > best_gain : gain < best_gain;
      if (b == 0 || better) {
        best = b;
        best_gain = gain;
      }
    }
    blocks[best].insert(j);
    values[best] = f(blocks[best]);
  }

  report.blocks = std::move(blocks);
  report.objective = TotalCorrelation(f, report.blocks);
  report.objective_kind = PartitionObjective::kTotalCorrelation;
  report.direction = direction;
  report.oracle_calls = f.evaluations() - calls_before;
  report.seed = config.seed;
  return report;
}

PartitionReport PartitionMultisetMiMax(const ValueOracle& f, size_t k_parts,
                                       const OptimizerConfig& config) {
  CheckParts(f, k_parts);
  const size_t n = f.ground_size();
  const auto* family = dynamic_cast<const FamilyFunction*>(&f.function());
  const std::vector<Subset> probe(k_parts, Subset(n));
  const bool closed = family != nullptr && family->ClosedFormMultisetMi(probe).has_value();
  if (!closed && k_parts > kMaxGenericMultisetArity) {
    throw ResourceError("generic multi-set mutual information supports at most " +
                        std::to_string(kMaxGenericMultisetArity) + " blocks, got " +
                        std::to_string(k_parts));
  }
  auto objective = [&](const std::vector<Subset>& blocks) {
    if (closed) return *family->ClosedFormMultisetMi(blocks);
    return MultisetMutualInformation(f, blocks);
  };

  PartitionReport report;
  report.guard = GuardOutcome::kUnchecked;
  const uint64_t calls_before = f.evaluations();
  const std::vector<size_t> order = SeededOrder(n, config.seed);
  std::vector<Subset> blocks(k_parts, Subset(n));
  std::vector<size_t> owner(n, 0);
  for (size_t b = 0; b < k_parts; ++b) {
    blocks[b].insert(order[b]);
    owner[order[b]] = b;
  }
  for (size_t pos = k_parts; pos < n; ++pos) {
    const size_t j = order[pos];
    // Ties are common (the objective is a min over blocks), so they go to
    // the block where j adds the most on its own.
    size_t best = 0;
    double best_value = 0.0, best_gain = 0.0;
    for (size_t b = 0; b < k_parts; ++b) {
      blocks[b].insert(j);
      const double v = objective(blocks);
      blocks[b].erase(j);
      const double gain = ConditionalGain(f, Subset::FromIndices(n, {j}), blocks[b]);
      if (b == 0 || v > best_value + kPositiveGain ||
          (v >= best_value - kPositiveGain && gain > best_gain + kPositiveGain)) {
        best = b;
        best_value = v;
        best_gain = gain;
      }
    }
    blocks[best].insert(j);
    owner[j] = best;
  }

  double current = objective(blocks);
  size_t moves = 0;
  while (moves < 10 * n) {
    double best_value = current;
    std::function<void()> best_apply;
    for (size_t e = 0; e < n; ++e) {
      const size_t from = owner[e];
      if (blocks[from].count() < 2) continue;
      for (size_t to = 0; to < k_parts; ++to) {
        if (to == from) continue;
        blocks[from].erase(e);
        blocks[to].insert(e);
        const double v = objective(blocks);
        blocks[to].erase(e);
        blocks[from].insert(e);
        if (v > best_value + kPositiveGain) {
          best_value = v;
          best_apply = [&, e, from, to] {
            blocks[from].erase(e);
            blocks[to].insert(e);
            owner[e] = to;
          };
        }
      }
    }
    for (size_t e1 = 0; e1 < n; ++e1) {
      for (size_t e2 = e1 + 1; e2 < n; ++e2) {
        const size_t b1 = owner[e1], b2 = owner[e2];
        if (b1 == b2) continue;
        blocks[b1].erase(e1);
        blocks[b2].erase(e2);
        blocks[b1].insert(e2);
        blocks[b2].insert(e1);
        const double v = objective(blocks);
        blocks[b1].erase(e2);
        blocks[b2].erase(e1);
        blocks[b1].insert(e1);
        blocks[b2].insert(e2);
        if (v > best_value + kPositiveGain) {
          best_value = v;
          best_apply = [&, e1, e2, b1, b2] {
            blocks[b1].erase(e1);
            blocks[b2].erase(e2);
            blocks[b1].insert(e2);
            blocks[b2].insert(e1);
            owner[e1] = b2;
            owner[e2] = b1;
          };
        }
      }
    }
    if (!best_apply) break;
    best_apply();
    current = objective(blocks);
    ++moves;
  }

  report.blocks = std::move(blocks);
  report.objective = current;
  report.objective_kind = PartitionObjective::kMultisetMi;
  report.direction = Direction::kMax;
  report.oracle_calls = f.evaluations() - calls_before;
  report.seed = config.seed;
  report.local_search_moves = moves;
  return report;
}

}  // namespace subinfo
