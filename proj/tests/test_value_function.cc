/*
 * Copyright 2026 The probex Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <map>

#include "instances.h"
#include "oracle.h"
#include "probex/errors.h"
#include "probex/generators.h"
#include "probex/value_function.h"

namespace probex {
namespace {

using testing::R;
using Table = std::map<FeatureSet::Mask, Rational>;

Table Tabulate(const SetFunction& v) {
  Table out;
  for (FeatureSet::Mask m = 0; m < (FeatureSet::Mask{1} << v.num_features()); ++m) {
    out[m] = v(FeatureSet::FromMask(m));
  }
  return out;
}

FeatureSet::Mask M(std::initializer_list<int> s) { return FeatureSet(s).mask(); }

TEST(LocalSufficient, AndOrGoldenTable) {
  const auto v = testing::Value(Mode::kLocalSufficient, testing::AndOr3(), testing::Uniform(3),
                                FeatureVector{1, 1, 1});
  const Table expected = {{M({}), R(3, 8)},      {M({0}), R(1, 2)},    {M({1}), R(1, 2)},
                          {M({2}), R(3, 4)},     {M({0, 1}), R(1, 2)}, {M({0, 2}), R(1)},
                          {M({1, 2}), R(1)},     {M({0, 1, 2}), R(1)}};
  EXPECT_EQ(Tabulate(v), expected);
}

TEST(LocalSufficient, OrGoldenTable) {
  const auto v =
      testing::Value(Mode::kLocalSufficient, testing::Or2(), testing::Uniform(2), FeatureVector{0, 1});
  const Table expected = {{M({}), R(3, 4)}, {M({0}), R(1, 2)}, {M({1}), R(1)}, {M({0, 1}), R(1)}};
  EXPECT_EQ(Tabulate(v), expected);
}

// Reference contrastive tables list v_suff of the complement; the values
// here are one minus those entries.
TEST(LocalContrastive, TablesMatchAfterComplementTransform) {
  const auto e = testing::Value(Mode::kLocalContrastive, testing::AndOr3(), testing::Uniform(3),
                                FeatureVector{1, 1, 1});
  const Table reference_e = {{M({}), R(1)},       {M({0}), R(1)},       {M({1}), R(1)},
                           {M({2}), R(1, 2)},   {M({0, 1}), R(3, 4)}, {M({0, 2}), R(1, 2)},
                           {M({1, 2}), R(1, 2)}, {M({0, 1, 2}), R(3, 8)}};
  for (const auto& [m, value] : reference_e) EXPECT_EQ(e(FeatureSet::FromMask(m)), 1 - value);

  const auto g =
      testing::Value(Mode::kLocalContrastive, testing::Or2(), testing::Uniform(2), FeatureVector{0, 1});
  const Table reference_g = {{M({}), R(1)}, {M({0}), R(1)}, {M({1}), R(1, 2)}, {M({0, 1}), R(3, 4)}};
  for (const auto& [m, value] : reference_g) EXPECT_EQ(g(FeatureSet::FromMask(m)), 1 - value);
}

TEST(GlobalSufficient, AndOrSingletonValue) {
  const auto v = testing::Value(Mode::kGlobalSufficient, testing::AndOr3(), testing::Uniform(3));
  EXPECT_EQ(v(FeatureSet{2}), R(13, 16));
  EXPECT_EQ(v(FeatureSet::Full(3)), R(1));
  // Class masses 3/8 and 5/8.
  EXPECT_EQ(v(FeatureSet()), R(34, 64));
}

TEST(GlobalSufficient, CorrelatedPairGains) {
  const auto v = testing::Value(Mode::kGlobalSufficient, testing::First2(), testing::CorrelatedPair());
  EXPECT_EQ(v(FeatureSet()), R(13, 25));
  EXPECT_EQ(v(FeatureSet{1}), R(3, 5));
  EXPECT_EQ(v(FeatureSet{1}) - v(FeatureSet()), R(2, 25));
  EXPECT_EQ(v(FeatureSet{0, 1}) - v(FeatureSet{0}), R(0));
}

TEST(GlobalValues, ConstantModel) {
  auto constant = std::make_shared<const Model>(Domains::Binary(3), DecisionTree::Constant(0), 2);
  const auto suff = testing::Value(Mode::kGlobalSufficient, constant, testing::Uniform(3));
  const auto con = testing::Value(Mode::kGlobalContrastive, constant, testing::Uniform(3));
  for (FeatureSet::Mask m = 0; m < 8; ++m) {
    EXPECT_EQ(suff(FeatureSet::FromMask(m)), R(1));
    EXPECT_EQ(con(FeatureSet::FromMask(m)), R(0));
  }
}

struct RandomInstance {
  testing::ModelPtr model;
  testing::DistPtr dist;
};

RandomInstance MakeInstance(int seed, bool empirical) {
  Rng rng(seed);
  const int n = UniformInt(rng, 2, 5);
  const Domains d = RandomDomains(rng, n, 3);
  testing::ModelPtr model;
  switch (seed % 3) {
    case 0: model = std::make_shared<const Model>(RandomTreeModel(rng, d, 4, 2 + seed % 2)); break;
    case 1: model = std::make_shared<const Model>(RandomEnsembleModel(rng, d, 3, 3)); break;
    default: model = std::make_shared<const Model>(RandomTruthTableModel(rng, d, 3)); break;
  }
  testing::DistPtr dist =
      empirical ? std::make_shared<const Distribution>(RandomDataset(rng, d, UniformInt(rng, 1, 12)))
                : std::make_shared<const Distribution>(RandomProduct(rng, d));
  return {model, dist};
}

TEST(ValueFunction, MatchesDefinitionOracleOnRandomInstances) {
  for (int seed = 0; seed < 60; ++seed) {
    for (bool empirical : {true, false}) {
      const RandomInstance inst = MakeInstance(seed, empirical);
      const auto support = oracle::SupportOf(*inst.dist);
      const int n = inst.model->num_features();
      const auto gs = testing::Value(Mode::kGlobalSufficient, inst.model, inst.dist);
      const auto gc = testing::Value(Mode::kGlobalContrastive, inst.model, inst.dist);
      // Instances are drawn from the support so every conditional is defined.
      const FeatureVector& x = support.points[seed % support.points.size()];
      const auto ls = testing::Value(Mode::kLocalSufficient, inst.model, inst.dist, x);
      const auto lc = testing::Value(Mode::kLocalContrastive, inst.model, inst.dist, x);
      for (FeatureSet::Mask m = 0; m < (FeatureSet::Mask{1} << n); ++m) {
        const FeatureSet s = FeatureSet::FromMask(m);
        ASSERT_EQ(gs(s), oracle::GlobalSuff(*inst.model, support, s)) << seed << " " << s.ToString();
        ASSERT_EQ(gc(s), oracle::GlobalCon(*inst.model, support, s)) << seed << " " << s.ToString();
        ASSERT_EQ(ls(s), oracle::LocalSuff(*inst.model, support, x, s)) << seed << " " << s.ToString();
        ASSERT_EQ(lc(s), oracle::LocalCon(*inst.model, support, x, s)) << seed << " " << s.ToString();
      }
    }
  }
}

TEST(ValueFunction, BaselineSemanticsMatchesSubstitutionCount) {
  for (int seed = 0; seed < 30; ++seed) {
    const RandomInstance inst = MakeInstance(seed, true);
    const auto& rows = inst.dist->empirical()->rows();
    const FeatureVector x = rows.back();
    const ValueFunction v(Mode::kLocalSufficient, inst.model, inst.dist, x, Semantics::kBaseline);
    for (FeatureSet::Mask m = 0; m < (FeatureSet::Mask{1} << inst.model->num_features()); ++m) {
      const FeatureSet s = FeatureSet::FromMask(m);
      ASSERT_EQ(v(s), oracle::Baseline(*inst.model, *inst.dist->empirical(), x, s));
    }
  }
}

TEST(ValueFunction, BaselineRequiresEmpiricalLocal) {
  const auto model = testing::Or2();
  EXPECT_THROW(ValueFunction(Mode::kLocalSufficient, model, testing::Uniform(2), FeatureVector{0, 1},
                             Semantics::kBaseline)
                   .Evaluate(FeatureSet()),
               Error);
  auto data = testing::Empirical({{0, 1}}, Domains::Binary(2));
  EXPECT_THROW(ValueFunction(Mode::kGlobalSufficient, model, data, std::nullopt, Semantics::kBaseline), Error);
}

TEST(ValueFunction, UndefinedConditionalIsAnError) {
  auto data = testing::Empirical({{0, 0}, {0, 1}}, Domains::Binary(2));
  const auto v = testing::Value(Mode::kLocalSufficient, testing::Or2(), data, FeatureVector{1, 1});
  EXPECT_EQ(v(FeatureSet()), R(1, 2));
  try {
    v(FeatureSet{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefinedConditional);
  }
}

TEST(ValueFunction, InstanceArityIsChecked) {
  EXPECT_THROW(testing::Value(Mode::kLocalSufficient, testing::Or2(), testing::Uniform(2)), Error);
  EXPECT_THROW(testing::Value(Mode::kGlobalSufficient, testing::Or2(), testing::Uniform(2), FeatureVector{0, 1}),
               Error);
  EXPECT_THROW(testing::Value(Mode::kGlobalSufficient, testing::Or2(), testing::Uniform(3)), Error);
}

TEST(ValueFunction, ParallelEvaluationIsDeterministic) {
  Rng rng(3);
  const Domains d = RandomDomains(rng, 6, 3);
  auto model = std::make_shared<const Model>(RandomTreeModel(rng, d, 5));
  auto data = std::make_shared<const Distribution>(RandomDataset(rng, d, 40));
  EvalOptions wide;
  wide.jobs = 4;
  const auto serial = testing::Value(Mode::kGlobalSufficient, model, data);
  const auto parallel = testing::Value(Mode::kGlobalSufficient, model, data, std::nullopt, wide);
  EXPECT_EQ(Tabulate(serial), Tabulate(parallel));
}

TEST(Backends, AgreeWhereverPreconditionsOverlap) {
  for (int seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const int n = UniformInt(rng, 2, 6);
    const Domains d = RandomDomains(rng, n, 3);
    const Model tree = RandomTreeModel(rng, d, 4, 3);
    const ProductDistribution product = RandomProduct(rng, d);
    const Model dnf = RandomOdnfModel(rng, n, 4);
    const ProductDistribution binary = RandomProduct(rng, Domains::Binary(n));
    const EmpiricalDistribution data = RandomDataset(rng, d, 10);
    for (FeatureSet::Mask m = 0; m < (FeatureSet::Mask{1} << n); ++m) {
      const FeatureSet s = FeatureSet::FromMask(m);
      ASSERT_EQ(EvalGlobalSuffLeafPairs(tree, product, s), EvalGlobalSuffBruteForce(tree, product, s));
      ASSERT_EQ(EvalGlobalSuffTermPairs(dnf, binary, s), EvalGlobalSuffBruteForce(dnf, binary, s));
      ASSERT_EQ(EvalGlobalSuffEmpirical(tree, data, s), EvalGlobalSuffBruteForce(tree, data, s));
    }
  }
}

TEST(Backends, RejectMismatchedInputs) {
  const auto table = testing::AndOr3();
  auto code = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidInput;
  };
  const Distribution uniform = ProductDistribution::Uniform(Domains::Binary(3));
  EXPECT_EQ(code([&] { EvalGlobalSuffLeafPairs(*table, uniform, FeatureSet()); }), ErrorCode::kBackendMismatch);
  EXPECT_EQ(code([&] { EvalGlobalSuffTermPairs(*table, uniform, FeatureSet()); }), ErrorCode::kBackendMismatch);
  const Model tree(Domains::Binary(3), DecisionTree::Constant(1));
  const Distribution data = EmpiricalDistribution({{0, 0, 0}}, Domains::Binary(3));
  EXPECT_EQ(code([&] { EvalGlobalSuffLeafPairs(tree, data, FeatureSet()); }), ErrorCode::kBackendMismatch);
  EvalOptions forced;
  forced.backend = Backend::kEmpirical;
  EXPECT_EQ(code([&] { GlobalSufficientValue(tree, uniform, FeatureSet(), forced); }),
            ErrorCode::kBackendMismatch);
  EXPECT_EQ(code([&] { EvalGlobalSuffBruteForce(*table, uniform, FeatureSet(), 4); }),
            ErrorCode::kDomainTooLarge);
}

TEST(Backends, AutoSelection) {
  const Model tree(Domains::Binary(2), DecisionTree::Constant(1));
  const Distribution uniform = ProductDistribution::Uniform(Domains::Binary(2));
  const Distribution data = EmpiricalDistribution({{0, 0}}, Domains::Binary(2));
  EXPECT_EQ(SelectBackend(tree, uniform), Backend::kLeafPairs);
  EXPECT_EQ(SelectBackend(tree, data), Backend::kEmpirical);
  EXPECT_EQ(SelectBackend(*testing::Or2(), uniform), Backend::kBruteForce);
}

}  // namespace
}  // namespace probex
