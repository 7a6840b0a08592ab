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

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "subinfo/analysis/brute_force.h"
#include "subinfo/analysis/curvature.h"
#include "subinfo/analysis/properties.h"
#include "subinfo/analysis/table.h"
#include "subinfo/core/error.h"
#include "subinfo/core/measures.h"
#include "subinfo/functions/family_function.h"
#include "test_util.h"

namespace subinfo {
namespace {

using testutil::AllSubsets;
using testutil::OracleFor;
using testutil::RandomSpec;
using testutil::RandomSubset;
using testutil::Rng;

constexpr double kTol = 1e-9;

Subset S(size_t n, std::initializer_list<size_t> idx) { return Subset::FromIndices(n, idx); }

std::shared_ptr<ValueOracle> Custom(size_t n, LambdaSetFunction::Fn fn) {
  return std::make_shared<ValueOracle>(
      std::make_shared<LambdaSetFunction>(n, std::move(fn), FunctionClaims{}, "custom"));
}

void ExpectViolatedAndReproducible(const ValueOracle& f, const PropertyReport& r) {
  ASSERT_EQ(r.verdict, Verdict::kViolated) << PropertyName(r.property);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_LT(r.witness->margin, -kTol);
  EXPECT_LE(r.worst_margin, r.witness->margin);
  EXPECT_TRUE(ReproducesViolation(f, r, kTol));
}

TEST(CheckMonotoneTest, Modular) {
  auto f = OracleFor(MakeModularSpec({1, 0, 2, 5}));
  const PropertyReport r = CheckMonotone(*f);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.pairs_checked, 4u * 8u);
  EXPECT_EQ(r.worst_margin, 0.0);
}

TEST(CheckMonotoneTest, NegativeWeightIsCaught) {
  const std::vector<double> w = {1.0, -0.5, 2.0};
  auto f = Custom(3, [w](const Subset& a) {
    double total = 0.0;
    a.ForEach([&](size_t i) { total += w[i]; });
    return total;
  });
  const PropertyReport r = CheckMonotone(*f);
  ExpectViolatedAndReproducible(*f, r);
  EXPECT_EQ(r.witness->elements, std::vector<size_t>{1});
  EXPECT_EQ(r.witness->sets[0], Subset(3));
  EXPECT_EQ(r.worst_margin, -0.5);
}

TEST(CheckMonotoneTest, GraphCutBelowTwoIsNotMonotone) {
  // λ = 1 on the all-ones 4 x 4 kernel: f(A) = 4|A| - |A|^2.
  auto f = Custom(4, [](const Subset& a) {
    const double c = static_cast<double>(a.count());
    return 1.0 * 4.0 * c - c * c;
  });
  ExpectViolatedAndReproducible(*f, CheckMonotone(*f));
  auto two = OracleFor(MakeGraphCutSpec(std::vector(4, std::vector<double>(4, 1.0)), 2.0));
  EXPECT_EQ(CheckMonotone(*two).verdict, Verdict::kHolds);
}

TEST(CheckSubmodularTest, Examples) {
  Rng rng(1);
  auto fl = OracleFor(RandomSpec(Family::kFacilityLocation, 7, rng));
  EXPECT_EQ(CheckSubmodular(*fl).verdict, Verdict::kHolds);
  auto square = Custom(4, [](const Subset& a) {
    const double c = static_cast<double>(a.count());
    return c * c;
  });
  const PropertyReport r = CheckSubmodular(*square);
  ExpectViolatedAndReproducible(*square, r);
  EXPECT_EQ(r.witness->elements, (std::vector<size_t>{0, 1}));
}

TEST(CertificatesTest, EveryFamilyIsMonotoneSubmodular) {
  Rng rng(2);
  for (Family fam : testutil::ShippedFamilies()) {
    for (int inst = 0; inst < 3; ++inst) {
      auto f = OracleFor(RandomSpec(fam, 5 + inst / 2, rng));
      EXPECT_EQ(CheckNormalized(*f).verdict, Verdict::kHolds) << FamilyName(fam);
      EXPECT_EQ(CheckMonotone(*f).verdict, Verdict::kHolds) << FamilyName(fam);
      EXPECT_EQ(CheckSubmodular(*f).verdict, Verdict::kHolds) << FamilyName(fam);
      EXPECT_EQ(CheckPseudoMetricAxioms(*f).verdict, Verdict::kHolds) << FamilyName(fam);
    }
  }
}

TEST(CertificatesTest, SecondOrderSupermodularityMatchesClaims) {
  Rng rng(3);
  for (Family fam : testutil::ShippedFamilies()) {
    for (int inst = 0; inst < 4; ++inst) {
      const FunctionSpec spec = RandomSpec(fam, 6, rng);
      auto f = OracleFor(spec);
      const PropertyReport r = CheckSecondOrderSupermodular(*f);
      EXPECT_EQ(r.verdict == Verdict::kHolds, f->claims().second_order_supermodular)
          << FamilyName(fam);
      if (r.verdict == Verdict::kViolated) ExpectViolatedAndReproducible(*f, r);
    }
  }
}

TEST(CertificatesTest, TruncationWitness) {
  for (size_t cap = 2; cap <= 5; ++cap) {
    auto f = OracleFor(MakeTruncationSpec(6, cap));
    const PropertyReport r = CheckSecondOrderSupermodular(*f);
    ExpectViolatedAndReproducible(*f, r);
    EXPECT_EQ(r.witness->sets[0].count(), cap - 2);
    EXPECT_EQ(r.witness->values, (std::vector<double>{-1.0, 0.0}));

    // f2 drops from 0 at ∅ to -1 once |A| = cap - 1.
    Subset a(6);
    for (size_t i = 0; i + 1 < cap; ++i) a.insert(i);
    auto f2 = [&](const Subset& x, size_t j, size_t k) {
      return (*f)(x.With(j).With(k)) - (*f)(x.With(j)) - (*f)(x.With(k)) + (*f)(x);
    };
    EXPECT_EQ(f2(a, 4, 5), -1.0);
    if (cap > 2) {
      EXPECT_EQ(f2(Subset(6), 4, 5), 0.0);
    }
  }
}

TEST(CertificatesTest, ConcavePowerHalf) {
  auto f = OracleFor(MakeConcavePowerSpec({1, 2, 0.5, 3, 1, 4}, 0.5));
  EXPECT_EQ(CheckSecondOrderSupermodular(*f).verdict, Verdict::kHolds);
  auto cover = OracleFor(MakeSetCoverSpec({{0, 1}, {1}, {2, 3}, {0, 3}, {4}, {}}, {1, 2, 1, 1, 3}));
  EXPECT_EQ(CheckSecondOrderSupermodular(*cover).verdict, Verdict::kHolds);
}

// For submodular f: f^(3) >= 0 everywhere iff A ↦ I_f(A;B) is submodular for
// every B.
TEST(CertificatesTest, SecondOrderEquivalence) {
  Rng rng(4);
  std::vector<FunctionSpec> specs;
  for (Family fam : testutil::ShippedFamilies()) specs.push_back(RandomSpec(fam, 5, rng));
  for (size_t cap = 1; cap <= 6; ++cap) specs.push_back(MakeTruncationSpec(6, cap));
  for (int i = 0; i < 6; ++i) specs.push_back(RandomSpec(Family::kMixture, 5, rng));
  size_t holds = 0, violated = 0;
  for (const FunctionSpec& spec : specs) {
    auto f = OracleFor(spec);
    const size_t n = spec.ground_size;
    const bool sos = CheckSecondOrderSupermodular(*f).verdict == Verdict::kHolds;
    bool all_submodular = true;
    for (const Subset& b : AllSubsets(n)) {
      auto g = Custom(n, [&f, b](const Subset& a) { return MutualInformation(*f, a, b); });
      if (CheckSubmodular(*g).verdict == Verdict::kViolated) {
        all_submodular = false;
        break;
      }
    }
    EXPECT_EQ(sos, all_submodular) << FamilyName(spec.family());
    (sos ? holds : violated)++;
  }
  EXPECT_GT(holds, 0u);
  EXPECT_GT(violated, 0u);
}

TEST(CertificatesTest, SecondOrderSupermodularMeansNonNegativeThreeWay) {
  Rng rng(5);
  for (Family fam : testutil::ShippedFamilies()) {
    const FunctionSpec spec = RandomSpec(fam, 6, rng);
    auto f = OracleFor(spec);
    if (CheckSecondOrderSupermodular(*f).verdict != Verdict::kHolds) continue;
    const std::vector<double> t = TabulateAll(*f, 6);
    double lowest = 0.0;
    for (size_t a = 0; a < 64; ++a) {
      for (size_t b = 0; b < 64; ++b) {
        for (size_t c = 0; c < 64; ++c) {
          const double v = t[a] + t[b] + t[c] - t[a | b] - t[a | c] - t[b | c] + t[a | b | c];
          lowest = std::min(lowest, v);
        }
      }
    }
    EXPECT_GE(lowest, -kTol) << FamilyName(fam);
  }
}

TEST(CertificatesTest, ZeroInformationMeansDummies) {
  Rng rng(6);
  std::vector<FunctionSpec> specs = {
      MakeModularSpec({0, 1, 0, 2, 0, 3}),
      MakeSetCoverSpec({{}, {0}, {1, 2}, {}, {0, 2}, {3}}, {1, 1, 2, 0}),
      MakeFacilityLocationSpec(testutil::RandomKernel(6, rng, false, true)),
  };
  for (int i = 0; i < 4; ++i) specs.push_back(RandomSpec(Family::kSetCover, 6, rng, true));
  for (const FunctionSpec& spec : specs) {
    auto f = OracleFor(spec);
    const std::vector<Subset> all = AllSubsets(6);
    for (const Subset& a : all) {
      bool all_dummy = true;
      a.ForEach([&](size_t j) { all_dummy = all_dummy && (*f)(S(6, {j})) == 0.0; });
      EXPECT_EQ((*f)(a) == 0.0, all_dummy);
      for (const Subset& b : all) {
        bool gains_zero = true;
        a.ForEach([&](size_t j) {
          gains_zero = gains_zero && std::abs(ConditionalGain(*f, S(6, {j}), b)) <= 1e-12;
        });
        EXPECT_EQ(std::abs(ConditionalGain(*f, a, b)) <= 1e-12, gains_zero);
      }
    }
  }
}

TEST(CheckPseudoMetricTest, NonMonotoneBreaksNonNegativity) {
  auto f = Custom(3, [](const Subset& a) { return -static_cast<double>(a.count()); });
  const PropertyReport r = CheckPseudoMetricAxioms(*f);
  ExpectViolatedAndReproducible(*f, r);
  EXPECT_EQ(r.witness->description.rfind("non-negativity", 0), 0u);
}

TEST(CheckPseudoMetricTest, TriangleViolation) {
  // Supermodular, so D loses the triangle inequality.
  auto f = Custom(3, [](const Subset& a) {
    const double c = static_cast<double>(a.count());
    return c * c * c;
  });
  const PropertyReport r = CheckPseudoMetricAxioms(*f);
  ASSERT_EQ(r.verdict, Verdict::kViolated);
  EXPECT_TRUE(ReproducesViolation(*f, r));
}

TEST(ChecksTest, NormalizedAndLimits) {
  auto shifted = Custom(3, [](const Subset& a) { return 1.0 + static_cast<double>(a.count()); });
  ExpectViolatedAndReproducible(*shifted, CheckNormalized(*shifted));
  auto big = OracleFor(MakeModularSpec(std::vector<double>(17, 1.0)));
  EXPECT_THROW(CheckMonotone(*big), ResourceError);
  CheckOptions wide;
  wide.n_limit = 17;
  EXPECT_EQ(CheckMonotone(*big, wide).verdict, Verdict::kHolds);
  auto eight = OracleFor(MakeModularSpec(std::vector<double>(8, 1.0)));
  EXPECT_THROW(CheckPseudoMetricAxioms(*eight), ResourceError);
  EXPECT_EQ(ParseProperty("submodular"), Property::kSubmodular);
  EXPECT_FALSE(ParseProperty("convex").has_value());
}

TEST(ChecksTest, ReportsDoNotDependOnThreadCount) {
  auto f = OracleFor(MakeTruncationSpec(10, 4));
  for (Property p : {Property::kMonotone, Property::kSubmodular,
                     Property::kSecondOrderSupermodular}) {
    CheckOptions one, many;
    one.threads = 1;
    many.threads = 8;
    const PropertyReport a = CheckProperty(*f, p, one);
    const PropertyReport b = CheckProperty(*f, p, many);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.pairs_checked, b.pairs_checked);
    EXPECT_EQ(a.worst_margin, b.worst_margin);
    ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
    if (a.witness) {
      EXPECT_EQ(a.witness->sets, b.witness->sets);
      EXPECT_EQ(a.witness->elements, b.witness->elements);
    }
  }
}

TEST(CurvatureTest, Examples) {
  auto modular = OracleFor(MakeModularSpec({1, 2, 3}));
  EXPECT_EQ(Curvature(*modular), 0.0);
  auto trunc = OracleFor(MakeTruncationSpec(5, 3));
  EXPECT_EQ(Curvature(*trunc), 1.0);
  auto dead = OracleFor(MakeModularSpec({0, 0}));
  EXPECT_THROW(Curvature(*dead), DegenerateError);
}

TEST(CurvatureTest, FacilityLocationDirectFormula) {
  Rng rng(7);
  for (int inst = 0; inst < 10; ++inst) {
    const size_t n = 4 + testutil::Below(rng, 5);
    const FunctionSpec spec = RandomSpec(Family::kFacilityLocation, n, rng);
    const auto& s = std::get<FacilityLocationParams>(spec.params).kernel.s;
    auto f = OracleFor(spec);
    double lowest = 1e300;
    for (size_t j = 0; j < n; ++j) {
      double fj = 0.0, gain = 0.0;
      for (size_t i = 0; i < n; ++i) {
        fj += s[i][j];
        double others = 0.0;
        for (size_t e = 0; e < n; ++e) {
          if (e != j) others = std::max(others, s[i][e]);
        }
        gain += std::max(0.0, s[i][j] - others);
      }
      lowest = std::min(lowest, gain / fj);
    }
    const double kappa = Curvature(*f);
    EXPECT_NEAR(kappa, 1.0 - lowest, 1e-12);
    EXPECT_GT(kappa, 0.0);
    EXPECT_LT(kappa, 1.0);
  }
}

TEST(CurvatureTest, DummiesAreExcludedAndReportConsistent) {
  auto f = OracleFor(MakeSetCoverSpec({{0}, {}, {0, 1}, {1}}, {1, 1}));
  const Subset sets[] = {S(4, {0, 2}), S(4, {1}), Subset(4), Subset::Full(4)};
  const CurvatureReport r = ComputeCurvature(*f, sets);
  EXPECT_EQ(r.dummies, std::vector<size_t>{1});
  EXPECT_EQ(r.kappa_at[3].second, r.kappa_global);
  EXPECT_EQ(r.kappa_at[1].second, 0.0);
  for (const auto& [set, value] : r.kappa_at) {
    EXPECT_GE(value, 0.0);
    EXPECT_LE(value, 1.0);
  }
  for (const auto& [set, value] : r.sym_kappa_at) {
    EXPECT_GE(value, 0.0);
    EXPECT_LE(value, 1.0);
  }
  // Everything outside Ω: nothing to maximize over.
  EXPECT_EQ(SymmetricCurvatureAt(*f, Subset::Full(4)), 0.0);
  double highest = 0.0;
  for (size_t j : {0, 2, 3}) {
    const Subset rest = Subset::Full(4).Without(j);
    highest = std::max(highest, ((*f)(Subset::Full(4)) - (*f)(rest)) / (*f)(S(4, {j})));
  }
  EXPECT_EQ(SymmetricCurvatureAt(*f, Subset(4)), highest);
}

TEST(CurvatureTest, SymmetricMiGainLowerBound) {
  Rng rng(8);
  for (Family fam : testutil::ShippedFamilies()) {
    const size_t n = 6;
    auto f = OracleFor(RandomSpec(fam, n, rng));
    if (DummyElements(*f).size() == n) continue;
    const Subset full = Subset::Full(n);
    for (int q = 0; q < 30; ++q) {
      const Subset a = RandomSubset(n, rng);
      const double kappa = SymmetricCurvatureAt(*f, a);
      a.Complement().ForEach([&](size_t j) {
        const double before = MutualInformation(*f, a, full - a);
        const Subset grown = a.With(j);
        const double after = MutualInformation(*f, grown, full - grown);
        EXPECT_GE(after - before, -kappa * (*f)(S(n, {j})) - kTol);
      });
    }
  }
}

TEST(HammingTest, Sandwich) {
  Rng rng(9);
  for (Family fam : testutil::ShippedFamilies()) {
    const size_t n = 7;
    auto f = OracleFor(RandomSpec(fam, n, rng));
    if (DummyElements(*f).size() == n) continue;
    for (int q = 0; q < 100; ++q) {
      const Subset a = RandomSubset(n, rng), b = RandomSubset(n, rng);
      const double d = VariationOfInformation(*f, a, b);
      const double sh = (*f)(a ^ b);
      const double sha = (*f)(a - b) + (*f)(b - a);
      const double kappa = CurvatureAt(*f, a | b);
      EXPECT_LE((1.0 - kappa) * sha, d + kTol) << FamilyName(fam);
      EXPECT_LE(d, sh + kTol);
      EXPECT_LE(sh, sha + kTol);
    }
  }
}

TEST(BruteForceTest, Max) {
  auto f = OracleFor(MakeModularSpec({3, 1, 4, 1, 5}));
  const BruteForceResult r = BruteForceMax(*f, 2);
  EXPECT_EQ(r.set, S(5, {2, 4}));
  EXPECT_EQ(r.value, 9.0);
  EXPECT_EQ(r.subsets_evaluated, 1u + 5u + 10u);
  const BruteForceResult zero = BruteForceMax(*f, 0);
  EXPECT_EQ(zero.set, Subset(5));
  EXPECT_EQ(zero.value, 0.0);
  auto ties = OracleFor(MakeModularSpec({1, 1, 1, 1}));
  EXPECT_EQ(BruteForceMax(*ties, 2).set, S(4, {0, 1}));
  EXPECT_EQ(BruteForceMax(*ties, 2, 1).set, BruteForceMax(*ties, 2, 8).set);
  auto big = OracleFor(MakeModularSpec(std::vector<double>(21, 1.0)));
  EXPECT_THROW(BruteForceMax(*big, 2), ResourceError);
}

TEST(BruteForceTest, MinMetricSum) {
  auto modular = OracleFor(MakeModularSpec({1, 2, 3, 4}));
  const Subset one[] = {S(4, {1, 3})};
  const BruteForceResult r = BruteForceMinMetricSum(*modular, one);
  EXPECT_EQ(r.set, S(4, {1, 3}));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_THROW(BruteForceMinMetricSum(*modular, {}), ArgumentError);

  // Disjoint size-k anchors all sit at distance 0 from each other.
  auto trunc = OracleFor(MakeTruncationSpec(6, 2));
  const Subset anchors[] = {S(6, {2, 3}), S(6, {4, 5})};
  const BruteForceResult t = BruteForceMinMetricSum(*trunc, anchors);
  EXPECT_EQ(t.value, 0.0);
  EXPECT_EQ(t.set, S(6, {0, 1}));

  Rng rng(10);
  for (int inst = 0; inst < 5; ++inst) {
    auto f = OracleFor(RandomSpec(Family::kSetCover, 8, rng));
    std::vector<Subset> anchors3 = {RandomSubset(8, rng), RandomSubset(8, rng),
                                    RandomSubset(8, rng)};
    double best = 1e300;
    for (const Subset& a : AllSubsets(8)) {
      double total = 0.0;
      for (const Subset& s : anchors3) total += VariationOfInformation(*f, a, s);
      best = std::min(best, total);
    }
    const BruteForceResult got = BruteForceMinMetricSum(*f, anchors3);
    EXPECT_NEAR(got.value, best, kTol);
  }
}

}  // namespace
}  // namespace subinfo
