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
#include "subinfo/core/error.h"
#include "subinfo/core/measures.h"
#include "subinfo/functions/family_function.h"
#include "subinfo/functions/function_spec.h"
#include "test_util.h"

namespace subinfo {
namespace {

using testutil::AllSubsets;
using testutil::RandomDisjoint;
using testutil::RandomSpec;
using testutil::RandomSubset;
using testutil::Rng;

constexpr double kTol = 1e-9;

Subset S(size_t n, std::initializer_list<size_t> idx) { return Subset::FromIndices(n, idx); }

struct Pair {
  std::shared_ptr<const FamilyFunction> fn;
  std::unique_ptr<ValueOracle> oracle;
};

Pair Build(const FunctionSpec& spec) {
  Pair p;
  p.fn = MakeFunction(spec);
  p.oracle = std::make_unique<ValueOracle>(p.fn);
  return p;
}

bool IntegerValued(const FunctionSpec& spec) {
  return spec.family() == Family::kModular || spec.family() == Family::kSetCover ||
         spec.family() == Family::kTruncation;
}

// Compares every available closed form against the generic path for (a, b)
// and, when given, the conditioning set c.
void ExpectAgreement(const Pair& p, const Subset& a, const Subset& b, const Subset* c,
                     bool exact) {
  const FamilyFunction& fn = *p.fn;
  const ValueOracle& f = *p.oracle;
  auto check = [&](std::optional<double> closed, double generic, const char* what) {
    if (!closed.has_value()) return;
    if (exact) {
      ASSERT_EQ(*closed, generic) << what << " " << a.ToString() << " " << b.ToString();
    } else {
      ASSERT_NEAR(*closed, generic, kTol) << what << " " << a.ToString() << " " << b.ToString();
    }
  };
  check(fn.ClosedFormConditionalGain(a, b), ConditionalGain(f, a, b), "gain");
  check(fn.ClosedFormMutualInformation(a, b), MutualInformation(f, a, b), "mi");
  check(fn.ClosedFormMetric(a, b), VariationOfInformation(f, a, b), "metric");
  if (c != nullptr) {
    const Subset three[] = {a, b, *c};
    const bool disjoint = a.IsDisjointFrom(b) && a.IsDisjointFrom(*c) && b.IsDisjointFrom(*c);
    // Probabilistic coverage only has these closed forms for disjoint sets.
    try {
      check(fn.ClosedFormConditionalMi(a, b, *c), ConditionalMutualInformation(f, a, b, *c),
            "cmi");
      check(fn.ClosedFormMultisetMi(three), MultisetMutualInformation(f, three), "multi");
    } catch (const PreconditionError&) {
      ASSERT_FALSE(disjoint);
    }
  }
}

TEST(EvaluateTest, Examples) {
  EXPECT_EQ(EvaluateSpec(MakeSetCoverSpec({{1}, {1, 2}}, {1, 1, 1}), S(2, {0, 1})), 2.0);
  const std::vector<std::vector<double>> k = {{1, 0.5, 0.5}, {0.5, 1, 0.5}, {0.5, 0.5, 1}};
  EXPECT_EQ(EvaluateSpec(MakeFacilityLocationSpec(k), S(3, {0})), 2.0);
  EXPECT_EQ(EvaluateSpec(MakeTruncationSpec(7, 2), S(7, {0, 1, 2, 3, 4})), 2.0);
  EXPECT_EQ(EvaluateSpec(MakeConcavePowerSpec({4, 5}, 0.5), S(2, {0, 1})), 3.0);
}

TEST(EvaluateTest, GraphCutMatchesDefinition) {
  Rng rng(1);
  const FunctionSpec spec = RandomSpec(Family::kGraphCut, 6, rng);
  const auto& gc = std::get<GraphCutParams>(spec.params);
  auto fn = MakeFunction(spec);
  for (const Subset& a : AllSubsets(6)) {
    double expected = 0.0;
    for (size_t i = 0; i < 6; ++i) {
      a.ForEach([&](size_t x) { expected += gc.lambda_gc * gc.kernel.s[i][x]; });
    }
    a.ForEach([&](size_t x) { a.ForEach([&](size_t y) { expected -= gc.kernel.s[x][y]; }); });
    EXPECT_NEAR(fn->Evaluate(a), expected, 1e-12);
  }
}

TEST(EvaluateTest, EmptySetIsZero) {
  Rng rng(2);
  for (Family fam : testutil::ShippedFamilies()) {
    EXPECT_EQ(EvaluateSpec(RandomSpec(fam, 6, rng), Subset(6)), 0.0);
  }
  EXPECT_EQ(EvaluateSpec(RandomSpec(Family::kMixture, 6, rng), Subset(6)), 0.0);
}

TEST(EvaluateTest, ProbCoverNearCertainCoverage) {
  const FunctionSpec spec =
      MakeProbSetCoverSpec({{1.0, 0.5}, {1.0 - 1e-13, 0.25}, {0.1, 0.0}}, {1.0, 2.0});
  auto fn = MakeFunction(spec);
  EXPECT_EQ(fn->Evaluate(S(3, {0})), 1.0 + 2.0 * 0.5);
  const double v = fn->Evaluate(S(3, {1, 2}));
  const double expected = 1.0 * (1.0 - 1e-13 * 0.9) + 2.0 * 0.25;
  EXPECT_NEAR(v, expected, 1e-15);
}

TEST(ValidationTest, RejectsInconsistentParameters) {
  EXPECT_THROW(MakeFunction(MakeModularSpec({1, -1})), ArgumentError);
  FunctionSpec bad = MakeModularSpec({1, 2});
  bad.ground_size = 3;
  EXPECT_THROW(MakeFunction(bad), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeSetCoverSpec({{0}, {3}}, {1, 1})), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeProbSetCoverSpec({{0.5, 1.5}}, {1, 1})), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeProbSetCoverSpec({{0.5}}, {1, 1})), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeFacilityLocationSpec({{0.9, 0}, {0, 1}})), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeFacilityLocationSpec({{1, 0}, {0}})), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeGraphCutSpec({{0, 0.5}, {0.5, 0}}, 1.5)), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeGraphCutSpec({{0, 0.5}, {0.4, 0}}, 2.0)), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeTruncationSpec(3, 0)), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeTruncationSpec(3, 4)), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeConcavePowerSpec({1, 1}, 0.0)), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeConcavePowerSpec({1, 1}, 1.5)), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeMixtureSpec({1.0}, {MakeModularSpec({1}),
                                                    MakeModularSpec({2})})),
               ArgumentError);
  EXPECT_THROW(MakeFunction(MakeMixtureSpec({1.0, 1.0}, {MakeModularSpec({1}),
                                                         MakeModularSpec({2, 2})})),
               ArgumentError);
  EXPECT_THROW(MakeFunction(MakeMixtureSpec({-1.0}, {MakeModularSpec({1})})), ArgumentError);
  EXPECT_THROW(MakeFunction(MakeModularSpec({})), ArgumentError);
}

TEST(ClosedFormTest, ConditionalGainExamples) {
  auto cover = MakeFunction(MakeSetCoverSpec({{1}, {1, 2}}, {1, 1, 1}));
  EXPECT_EQ(*cover->ClosedFormConditionalGain(S(2, {1}), S(2, {0})), 1.0);
  Rng rng(3);
  for (Family fam : testutil::ShippedFamilies()) {
    auto fn = MakeFunction(RandomSpec(fam, 6, rng));
    const Subset a = RandomSubset(6, rng);
    EXPECT_NEAR(*fn->ClosedFormConditionalGain(a, Subset(6)), fn->Evaluate(a), 1e-12);
  }

  const Pair cut = Build(RandomSpec(Family::kGraphCut, 6, rng));
  const auto& s = std::get<GraphCutParams>(cut.fn->spec().params).kernel.s;
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<Subset> d = RandomDisjoint(6, 2, rng);
    double cross = 0.0;
    d[0].ForEach([&](size_t x) { d[1].ForEach([&](size_t y) { cross += s[x][y]; }); });
    const double closed = *cut.fn->ClosedFormConditionalGain(d[0], d[1]);
    EXPECT_NEAR(closed, cut.fn->Evaluate(d[0]) - 2.0 * cross, 1e-12);
    EXPECT_NEAR(closed, ConditionalGain(*cut.oracle, d[0], d[1]), kTol);
  }
}

TEST(ClosedFormTest, MutualInformationExamples) {
  auto modular = MakeFunction(MakeModularSpec({1, 1, 1, 1}));
  const Subset sets[] = {S(4, {0, 1}), S(4, {1, 2}), S(4, {1, 3})};
  EXPECT_EQ(*modular->ClosedFormMultisetMi(sets), 1.0);

  Rng rng(4);
  auto fl = MakeFunction(RandomSpec(Family::kFacilityLocation, 6, rng));
  const Subset with_empty[] = {S(6, {0, 1}), Subset(6), S(6, {2, 3, 4}), S(6, {5})};
  EXPECT_EQ(*fl->ClosedFormMultisetMi(with_empty), 0.0);

  const Pair cut = Build(RandomSpec(Family::kGraphCut, 7, rng));
  const auto& s = std::get<GraphCutParams>(cut.fn->spec().params).kernel.s;
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<Subset> d = RandomDisjoint(7, 2, rng);
    double cross = 0.0;
    d[0].ForEach([&](size_t x) { d[1].ForEach([&](size_t y) { cross += s[x][y]; }); });
    const double closed = *cut.fn->ClosedFormMutualInformation(d[0], d[1]);
    EXPECT_NEAR(closed, 2.0 * cross, 1e-12);
    EXPECT_NEAR(closed, MutualInformation(*cut.oracle, d[0], d[1]), kTol);
  }
}

TEST(ClosedFormTest, MetricExamples) {
  auto modular = MakeFunction(MakeModularSpec({2, 3}));
  EXPECT_EQ(*modular->ClosedFormMetric(S(2, {0}), S(2, {1})), 5.0);
  EXPECT_EQ(*modular->ClosedFormMetric(S(2, {1}), S(2, {1})), 0.0);

  Rng rng(5);
  const FunctionSpec spec = RandomSpec(Family::kFacilityLocation, 6, rng);
  const auto& s = std::get<FacilityLocationParams>(spec.params).kernel.s;
  const Pair fl = Build(spec);
  for (int trial = 0; trial < 50; ++trial) {
    const Subset a = RandomSubset(6, rng), b = RandomSubset(6, rng);
    double expected = 0.0;
    for (size_t i = 0; i < 6; ++i) {
      double ma = 0.0, mb = 0.0;
      a.ForEach([&](size_t e) { ma = std::max(ma, s[i][e]); });
      b.ForEach([&](size_t e) { mb = std::max(mb, s[i][e]); });
      expected += std::abs(ma - mb);
    }
    EXPECT_NEAR(*fl.fn->ClosedFormMetric(a, b), expected, 1e-12);
    EXPECT_NEAR(expected, VariationOfInformation(*fl.oracle, a, b), kTol);
  }
}

TEST(ClosedFormTest, ProbCoverConditionalMi) {
  Rng rng(6);
  const FunctionSpec spec = RandomSpec(Family::kProbSetCover, 6, rng);
  const auto& pc = std::get<ProbCoverageMatrix>(spec.params);
  const std::vector<Subset> d = RandomDisjoint(6, 2, rng);
  double expected = 0.0;
  for (size_t i = 0; i < pc.concept_weights.size(); ++i) {
    double pa = 1.0, pb = 1.0;
    d[0].ForEach([&](size_t e) { pa *= 1 - pc.p[e][i]; });
    d[1].ForEach([&](size_t e) { pb *= 1 - pc.p[e][i]; });
    expected += pc.concept_weights[i] * (1 - pa) * (1 - pb);
  }
  EXPECT_NEAR(ClosedFormConditionalMiProbCover(spec, d[0], d[1], Subset(6)), expected, 1e-12);

  // A concept nobody can cover contributes nothing.
  FunctionSpec dead = MakeProbSetCoverSpec({{0.5, 0}, {0.3, 0}, {0.9, 0}}, {1.0, 7.0});
  FunctionSpec alive = MakeProbSetCoverSpec({{0.5}, {0.3}, {0.9}}, {1.0});
  EXPECT_EQ(ClosedFormConditionalMiProbCover(dead, S(3, {0}), S(3, {1}), S(3, {2})),
            ClosedFormConditionalMiProbCover(alive, S(3, {0}), S(3, {1}), S(3, {2})));

  const FunctionSpec small = [&] {
    std::vector<std::vector<double>> p(5, std::vector<double>(4));
    for (auto& row : p) {
      for (double& v : row) v = testutil::Uniform(rng);
    }
    return MakeProbSetCoverSpec(p, {1.0, 0.5, 2.0, 1.5});
  }();
  const Pair pair = Build(small);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<Subset> t = RandomDisjoint(5, 3, rng);
    EXPECT_NEAR(ClosedFormConditionalMiProbCover(small, t[0], t[1], t[2]),
                ConditionalMutualInformation(*pair.oracle, t[0], t[1], t[2]), 1e-12);
  }
  EXPECT_THROW(ClosedFormConditionalMiProbCover(small, S(5, {0, 1}), S(5, {1}), S(5, {2})),
               PreconditionError);
  const Subset overlapping[] = {S(5, {0}), S(5, {1}), S(5, {1, 2})};
  EXPECT_THROW(pair.fn->ClosedFormMultisetMi(overlapping), PreconditionError);
  EXPECT_THROW(ClosedFormConditionalMiProbCover(MakeModularSpec({1}), S(1, {0}), Subset(1),
                                                Subset(1)),
               ArgumentError);
}

TEST(ClosedFormTest, ExhaustiveAgreementAtSmallN) {
  Rng rng(7);
  for (Family fam : testutil::ShippedFamilies()) {
    for (size_t n : {1u, 3u, 6u}) {
      const FunctionSpec spec = RandomSpec(fam, n, rng, /*integer=*/true);
      const Pair p = Build(spec);
      const bool exact = IntegerValued(spec);
      const std::vector<Subset> all = AllSubsets(n);
      for (const Subset& a : all) {
        for (const Subset& b : all) {
          ExpectAgreement(p, a, b, nullptr, exact);
          if (n <= 3 || fam == Family::kModular || fam == Family::kSetCover ||
              fam == Family::kFacilityLocation || fam == Family::kProbSetCover) {
            for (const Subset& c : all) ExpectAgreement(p, a, b, &c, exact);
          }
        }
      }
    }
  }
}

TEST(ClosedFormTest, RandomAgreementUpToTwelve) {
  Rng rng(8);
  for (int inst = 0; inst < 1000; ++inst) {
    const size_t n = 1 + testutil::Below(rng, 12);
    const bool mixture = inst % 10 == 9;
    const Family fam = mixture ? Family::kMixture : testutil::ShippedFamilies()[inst % 7];
    const FunctionSpec spec = RandomSpec(fam, n, rng);
    const Pair p = Build(spec);
    for (int q = 0; q < 5; ++q) {
      const Subset a = RandomSubset(n, rng), b = RandomSubset(n, rng);
      const std::vector<Subset> d = RandomDisjoint(n, 3, rng);
      const Subset c = RandomSubset(n, rng);
      ExpectAgreement(p, a, b, &c, false);
      ExpectAgreement(p, d[0], d[1], &d[2], false);
    }
  }
}

TEST(ClosedFormTest, FacilityLocationSymmetricIdentity) {
  Rng rng(9);
  for (int inst = 0; inst < 20; ++inst) {
    const size_t n = 2 + testutil::Below(rng, 9);
    const FunctionSpec spec = RandomSpec(Family::kFacilityLocation, n, rng);
    const auto& s = std::get<FacilityLocationParams>(spec.params).kernel.s;
    auto fn = MakeFunction(spec);
    for (int q = 0; q < 20; ++q) {
      const Subset a = RandomSubset(n, rng);
      const Subset rest = a.Complement();
      double identity = 0.0;
      for (size_t i = 0; i < n; ++i) {
        const Subset& other = a.contains(i) ? rest : a;
        double best = 0.0;
        other.ForEach([&](size_t e) { best = std::max(best, s[i][e]); });
        identity += best;
      }
      EXPECT_EQ(*fn->ClosedFormMutualInformation(a, rest), identity);
    }
  }
}

TEST(ClosedFormTest, MixtureDistributes) {
  Rng rng(10);
  const FunctionSpec x = RandomSpec(Family::kSetCover, 6, rng);
  const FunctionSpec y = RandomSpec(Family::kFacilityLocation, 6, rng);
  const FunctionSpec z = RandomSpec(Family::kGraphCut, 6, rng);
  auto mix = MakeFunction(MakeMixtureSpec({0.5, 2.0}, {x, y}));
  auto fx = MakeFunction(x), fy = MakeFunction(y);
  for (int q = 0; q < 20; ++q) {
    const Subset a = RandomSubset(6, rng), b = RandomSubset(6, rng), c = RandomSubset(6, rng);
    EXPECT_NEAR(mix->Evaluate(a), 0.5 * fx->Evaluate(a) + 2.0 * fy->Evaluate(a), 1e-12);
    EXPECT_NEAR(*mix->ClosedFormConditionalMi(a, b, c),
                0.5 * *fx->ClosedFormConditionalMi(a, b, c) +
                    2.0 * *fy->ClosedFormConditionalMi(a, b, c),
                1e-12);
  }
  auto with_cut = MakeFunction(MakeMixtureSpec({1.0, 1.0}, {x, z}));
  EXPECT_FALSE(with_cut->ClosedFormConditionalMi(S(6, {0}), S(6, {1}), S(6, {2})).has_value());
  EXPECT_TRUE(with_cut->ClosedFormMutualInformation(S(6, {0}), S(6, {1})).has_value());
  EXPECT_EQ(mix->name(), "mixture");
}

TEST(ClosedFormTest, MeasureDispatch) {
  auto fn = MakeFunction(MakeModularSpec({1, 2, 4}));
  auto r = fn->ClosedFormMeasure({MeasureKind::kVarInfo, {S(3, {0}), S(3, {1, 2})}, {}});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->value, 7.0);
  EXPECT_EQ(r->path, ComputePath::kClosedForm);
  EXPECT_EQ(r->oracle_calls, 0u);
  EXPECT_FALSE(fn->ClosedFormMeasure({MeasureKind::kTotalCorr, {S(3, {0})}, {}}).has_value());
  EXPECT_THROW(fn->ClosedFormMeasure({MeasureKind::kMI, {S(3, {0})}, {}}), ArgumentError);
  EXPECT_THROW(fn->ClosedFormMutualInformation(S(3, {0}), S(4, {0})), StructuralError);
}

TEST(ClaimsTest, SecondOrderSupermodularityClaims) {
  Rng rng(11);
  for (Family fam : testutil::ShippedFamilies()) {
    auto fn = MakeFunction(RandomSpec(fam, 6, rng));
    EXPECT_TRUE(fn->claims().monotone);
    EXPECT_TRUE(fn->claims().submodular);
  }
  EXPECT_FALSE(MakeFunction(MakeTruncationSpec(6, 3))->claims().second_order_supermodular);
  EXPECT_TRUE(MakeFunction(MakeTruncationSpec(6, 6))->claims().second_order_supermodular);
  EXPECT_TRUE(MakeFunction(MakeTruncationSpec(6, 1))->claims().second_order_supermodular);
  EXPECT_TRUE(MakeFunction(RandomSpec(Family::kFacilityLocation, 4, rng))
                  ->claims()
                  .second_order_supermodular);
  auto mix = MakeFunction(
      MakeMixtureSpec({1, 1}, {MakeTruncationSpec(6, 3), MakeModularSpec(std::vector(6, 1.0))}));
  EXPECT_FALSE(mix->claims().second_order_supermodular);
}

TEST(SpecTest, FamilyNamesRoundTrip) {
  for (Family fam : testutil::ShippedFamilies()) {
    Family parsed;
    ASSERT_TRUE(ParseFamily(FamilyName(fam), &parsed));
    EXPECT_EQ(parsed, fam);
  }
  Family parsed;
  EXPECT_FALSE(ParseFamily("entropy", &parsed));
  Rng a(12), b(12);
  EXPECT_EQ(RandomSpec(Family::kMixture, 5, a), RandomSpec(Family::kMixture, 5, b));
}

}  // namespace
}  // namespace subinfo
