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

#include "instances.h"
#include "probex/distribution.h"
#include "probex/errors.h"
#include "probex/generators.h"

namespace probex {
namespace {

using testing::R;

TEST(EmpiricalDistribution, WeighsDuplicates) {
  const auto d = testing::CorrelatedPair();
  const EmpiricalDistribution& e = *d->empirical();
  EXPECT_EQ(e.size(), 10);
  EXPECT_EQ(e.PointMass(std::vector<int>{0, 0}), R(2, 5));
  EXPECT_EQ(e.Multiplicity(std::vector<int>{1, 0}), 1);
  EXPECT_EQ(e.PointMass(std::vector<int>{1, 1}), R(3, 10));
  EXPECT_EQ(e.MatchingRows(std::vector<int>{1, 0}, FeatureSet{0}), (std::vector<int>{6, 7, 8, 9}));
  EXPECT_EQ(e.MatchingRows(std::vector<int>{1, 0}, FeatureSet()).size(), 10u);
}

TEST(EmpiricalDistribution, CitesOffendingRow) {
  try {
    EmpiricalDistribution({{0, 1}, {0, 2}}, Domains::Binary(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
  EXPECT_THROW(EmpiricalDistribution({}, Domains::Binary(2)), Error);
}

TEST(ProductDistribution, PointAndConstraintMass) {
  const Domains d({{0, 1}, {0, 1, 2}});
  const ProductDistribution p(d, {{R(1, 4), R(3, 4)}, {R(1, 2), R(1, 3), R(1, 6)}});
  EXPECT_EQ(p.PointMass(std::vector<int>{1, 2}), R(1, 8));
  EXPECT_EQ(p.Mass(1, 1), R(1, 3));
  EXPECT_EQ(p.ConstraintMass(1, std::vector<int>{0, 2}), R(2, 3));
  EXPECT_EQ(p.ConstraintMass(0, std::optional<int>()), R(1));
  EXPECT_EQ(p.ConstraintMass(0, std::optional<int>(0)), R(1, 4));
  Rational total = 0;
  for (const auto& x : DomainRange(d)) total += p.PointMass(x);
  EXPECT_EQ(total, R(1));
}

TEST(ProductDistribution, RejectsBadMarginals) {
  const Domains d = Domains::Binary(1);
  EXPECT_THROW(ProductDistribution(d, {{R(1, 2), R(1, 3)}}), Error);
  EXPECT_THROW(ProductDistribution(d, {{R(3, 2), R(-1, 2)}}), Error);
  EXPECT_THROW(ProductDistribution(d, {{R(1)}}), Error);
  EXPECT_THROW(ProductDistribution(d, {}), Error);
}

TEST(ProductDistribution, UniformIsFlat) {
  const auto u = ProductDistribution::Uniform(Domains({{0, 1, 2}, {5, 6}}));
  EXPECT_EQ(u.PointMass(std::vector<int>{2, 6}), R(1, 6));
}

TEST(Generators, AreSeedDeterministic) {
  Rng a(7), b(7);
  const Domains da = RandomDomains(a, 5, 3), db = RandomDomains(b, 5, 3);
  EXPECT_EQ(da, db);
  EXPECT_EQ(RandomDataset(a, da, 9).rows(), RandomDataset(b, db, 9).rows());
  const auto pa = RandomProduct(a, da), pb = RandomProduct(b, db);
  for (int f = 0; f < 5; ++f) EXPECT_EQ(pa.marginal(f), pb.marginal(f));
}

TEST(Generators, ProductGridIsACartesianProduct) {
  for (int seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Domains d = RandomDomains(rng, 8, 3);
    const EmpiricalDistribution grid = ProductGridDataset(rng, d, 32);
    EXPECT_LE(grid.size(), 32);
    // Point mass factorises into the empirical marginals.
    std::vector<std::map<int, int>> marginal(8);
    for (const auto& row : grid.rows()) {
      for (int f = 0; f < 8; ++f) ++marginal[f][row[f]];
    }
    for (const auto& row : grid.rows()) {
      Rational m = 1;
      for (int f = 0; f < 8; ++f) m *= R(marginal[f][row[f]], grid.size());
      EXPECT_EQ(grid.PointMass(row), m);
    }
  }
}

TEST(Generators, OdnfTermsAreOrthogonal) {
  for (int seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    EXPECT_NO_THROW(RandomOdnfModel(rng, 6, 4));
  }
}

}  // namespace
}  // namespace probex
