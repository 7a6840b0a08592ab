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

#include "subinfo/analysis/brute_force.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "subinfo/analysis/table.h"
#include "subinfo/core/error.h"
#include "subinfo/core/parallel.h"

namespace subinfo {
namespace {

void CheckSize(size_t n) {
  if (n > kMaxBruteForceGround) {
    throw ResourceError("brute force over " + std::to_string(n) +
                        " elements exceeds the limit of " +
                        std::to_string(kMaxBruteForceGround));
  }
}

struct Best {
  uint64_t mask = 0;
  double value = 0.0;
  bool any = false;
  uint64_t evaluated = 0;
};

// Scans masks in ascending order per chunk, keeping the first strict
// improvement, then folds chunks in order so ties go to the smallest mask.
template <typename Score, typename Better>
Best Scan(size_t n, size_t threads, Score score, Better better) {
  const size_t total = size_t{1} << n;
  const size_t chunks = std::min<size_t>(total, 256);
  std::vector<Best> parts(chunks);
  ParallelChunks(total, chunks, threads, [&](size_t c, size_t begin, size_t end) {
    Best& b = parts[c];
    for (size_t m = begin; m < end; ++m) {
      double v;
      if (!score(m, &v)) continue;
      ++b.evaluated;
      if (!b.any || better(v, b.value)) {
        b = Best{m, v, true, b.evaluated};
      }
    }
  });
  Best out;
  for (const Best& b : parts) {
    out.evaluated += b.evaluated;
    if (b.any && (!out.any || better(b.value, out.value))) {
      out.mask = b.mask;
      out.value = b.value;
      out.any = true;
    }
  }
  return out;
}

}  // namespace

BruteForceResult BruteForceMax(const ValueOracle& objective, size_t k, size_t threads) {
  const size_t n = objective.ground_size();
  CheckSize(n);
  Best b = Scan(
      n, threads,
      [&](uint64_t m, double* v) {
        if (static_cast<size_t>(std::popcount(m)) > k) return false;
        *v = objective.EvaluateUncached(Subset::FromMask(n, m));
        return true;
      },
      [](double x, double y) { return x > y; });
  return {Subset::FromMask(n, b.mask), b.value, b.evaluated};
}

BruteForceResult BruteForceMinMetricSum(const ValueOracle& f, std::span<const Subset> anchors,
                                        size_t threads) {
  const size_t n = f.ground_size();
  CheckSize(n);
  if (anchors.empty()) throw ArgumentError("metric-sum minimization needs at least one anchor");
  std::vector<uint64_t> anchor_masks;
  for (const Subset& s : anchors) {
    if (s.universe_size() != n) {
      throw StructuralError("anchor " + s.ToString() + " is over a ground set of size " +
                            std::to_string(s.universe_size()));
    }
    anchor_masks.push_back(s.mask());
  }
  const std::vector<double> t = TabulateAll(f, kMaxBruteForceGround, threads);
  Best b = Scan(
      n, threads,
      [&](uint64_t m, double* v) {
        double total = 0.0;
        for (uint64_t s : anchor_masks) {
          const double u = t[m | s];
          total += (u - t[m]) + (u - t[s]);
        }
        *v = total;
        return true;
      },
      [](double x, double y) { return x < y; });
  return {Subset::FromMask(n, b.mask), b.value, b.evaluated};
}

}  // namespace subinfo
