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

#include "subinfo/cli/generate.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "subinfo/cli/instance.h"
#include "subinfo/core/error.h"
#include "subinfo/core/random.h"
#include "subinfo/functions/function_spec.h"

namespace subinfo::cli {
namespace {

using nlohmann::json;

// Integer concept weights keep coverage fixtures exact.
std::vector<double> ConceptWeights(size_t m, std::mt19937_64& rng) {
  std::vector<double> w(m);
  for (double& x : w) x = static_cast<double>(1 + UniformIndex(rng, 5));
  return w;
}

FunctionSpec KernelSpec(const GenerateParams& p, std::mt19937_64& rng) {
  if (p.off_diagonal && !(*p.off_diagonal >= 0.0 && *p.off_diagonal <= 1.0)) {
    throw ArgumentError("off-diagonal value must lie in [0, 1]");
  }
  std::vector<std::vector<double>> s(p.n, std::vector<double>(p.n, 1.0));
  for (size_t i = 0; i < p.n; ++i) {
    for (size_t j = i + 1; j < p.n; ++j) {
      const double v = p.off_diagonal ? *p.off_diagonal
                                      : static_cast<double>(UniformIndex(rng, 1001)) / 1000.0;
      s[i][j] = s[j][i] = v;
    }
  }
  if (p.family == "facility_location") return MakeFacilityLocationSpec(std::move(s));
  if (p.family == "graph_cut") return MakeGraphCutSpec(std::move(s), p.lambda, true);
  throw ArgumentError("kernel family must be facility_location or graph_cut, got " + p.family);
}

FunctionSpec CoverageSpec(const GenerateParams& p, std::mt19937_64& rng) {
  const size_t m = p.concepts == 0 ? p.n : p.concepts;
  if (p.multiplicity < 1 || p.multiplicity > p.n) {
    throw ArgumentError("multiplicity must lie in [1, n]");
  }
  std::vector<std::vector<size_t>> gamma(p.n);
  std::vector<size_t> order(p.n);
  for (size_t u = 0; u < m; ++u) {
    std::iota(order.begin(), order.end(), 0);
    Shuffle(order, rng);
    for (size_t c = 0; c < p.multiplicity; ++c) gamma[order[c]].push_back(u);
  }
  return MakeSetCoverSpec(std::move(gamma), ConceptWeights(m, rng));
}

FunctionSpec ProbCoverSpec(const GenerateParams& p, std::mt19937_64& rng) {
  const size_t m = p.concepts == 0 ? p.n : p.concepts;
  if (!(p.density >= 0.0 && p.density <= 1.0)) throw ArgumentError("density must lie in [0, 1]");
  std::vector<std::vector<double>> prob(p.n, std::vector<double>(m, 0.0));
  for (auto& row : prob) {
    for (double& x : row) {
      if (UniformUnit(rng) < p.density) x = static_cast<double>(1 + UniformIndex(rng, 1000)) / 1000.0;
    }
  }
  return MakeProbSetCoverSpec(std::move(prob), ConceptWeights(m, rng));
}

}  // namespace

std::string GenerateKindName(GenerateKind k) {
  switch (k) {
    case GenerateKind::kKernel: return "kernel";
    case GenerateKind::kCoverage: return "coverage";
    case GenerateKind::kProbCover: return "prob-cover";
  }
  return "unknown";
}

std::optional<GenerateKind> ParseGenerateKind(const std::string& name) {
  for (GenerateKind k : {GenerateKind::kKernel, GenerateKind::kCoverage, GenerateKind::kProbCover}) {
    if (GenerateKindName(k) == name) return k;
  }
  return std::nullopt;
}

json Generate(GenerateKind kind, const GenerateParams& params) {
  if (params.n < 1) throw ArgumentError("n must be at least 1");
  std::mt19937_64 rng(params.seed);
  FunctionSpec spec;
  switch (kind) {
    case GenerateKind::kKernel: spec = KernelSpec(params, rng); break;
    case GenerateKind::kCoverage: spec = CoverageSpec(params, rng); break;
    case GenerateKind::kProbCover: spec = ProbCoverSpec(params, rng); break;
  }
  ValidateSpec(spec);
  json out;
  out["ground_set"]["size"] = params.n;
  out["function"] = FunctionSpecToJson(spec);
  return out;
}

}  // namespace subinfo::cli
