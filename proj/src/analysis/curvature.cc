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

#include "subinfo/analysis/curvature.h"

#include <algorithm>

#include "subinfo/core/error.h"

namespace subinfo {
namespace {

constexpr double kDummyTol = 1e-12;

double Singleton(const ValueOracle& f, size_t j) {
  return f(Subset::FromIndices(f.ground_size(), {j}));
}

}  // namespace

std::vector<size_t> DummyElements(const ValueOracle& f, double tol) {
  std::vector<size_t> out;
  for (size_t j = 0; j < f.ground_size(); ++j) {
    if (Singleton(f, j) <= tol) out.push_back(j);
  }
  return out;
}

double CurvatureAt(const ValueOracle& f, const Subset& a) {
  double lowest = 1.0;
  const double fa = f(a);
  a.ForEach([&](size_t j) {
    const double fj = Singleton(f, j);
    if (fj <= kDummyTol) return;
    lowest = std::min(lowest, (fa - f(a.Without(j))) / fj);
  });
  return 1.0 - lowest;
}

double Curvature(const ValueOracle& f) {
  const size_t n = f.ground_size();
  if (DummyElements(f, kDummyTol).size() == n) {
    throw DegenerateError("curvature is undefined: every element has f(j) = 0");
  }
  return CurvatureAt(f, Subset::Full(n));
}

double SymmetricCurvatureAt(const ValueOracle& f, const Subset& a) {
  const Subset outside = a.Complement();
  double highest = 0.0;
  outside.ForEach([&](size_t j) {
    const double fj = Singleton(f, j);
    if (fj <= kDummyTol) return;
    const Subset rest = outside.Without(j);
    highest = std::max(highest, (f(rest.With(j)) - f(rest)) / fj);
  });
  return highest;
}

CurvatureReport ComputeCurvature(const ValueOracle& f, std::span<const Subset> at) {
  CurvatureReport r;
  r.dummies = DummyElements(f, kDummyTol);
  r.kappa_global = Curvature(f);
  for (const Subset& a : at) {
    r.kappa_at.emplace_back(a, CurvatureAt(f, a));
    r.sym_kappa_at.emplace_back(a, SymmetricCurvatureAt(f, a));
  }
  return r;
}

}  // namespace subinfo
