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

#ifndef SUBINFO_ANALYSIS_CURVATURE_H_
#define SUBINFO_ANALYSIS_CURVATURE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "subinfo/core/oracle.h"
#include "subinfo/core/subset.h"

namespace subinfo {

struct CurvatureReport {
  double kappa_global = 0.0;
  std::vector<std::pair<Subset, double>> kappa_at;
  std::vector<std::pair<Subset, double>> sym_kappa_at;
  std::vector<size_t> dummies;
};

// Elements with f(j) <= tol. They carry no information and are left out of
// every curvature min/max below.
std::vector<size_t> DummyElements(const ValueOracle& f, double tol = 1e-12);

// κ_f(A) = 1 - min_{j∈A} f(j | A\j) / f(j). 0 when A has no non-dummy element.
double CurvatureAt(const ValueOracle& f, const Subset& a);

// κ_f = κ_f(Ω). Throws DegenerateError when every element is a dummy.
double Curvature(const ValueOracle& f);

// max_{j∉A} f(j | Ω \ (A ∪ j)) / f(j), the curvature that bounds how far
// A ↦ I_f(A; Ω\A) is from monotone. 0 when no non-dummy element lies outside A.
double SymmetricCurvatureAt(const ValueOracle& f, const Subset& a);

CurvatureReport ComputeCurvature(const ValueOracle& f, std::span<const Subset> at = {});

}  // namespace subinfo

#endif  // SUBINFO_ANALYSIS_CURVATURE_H_
