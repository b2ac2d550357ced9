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

#ifndef PROBEX_TESTS_INSTANCES_H_
#define PROBEX_TESTS_INSTANCES_H_

#include <bit>
#include <memory>

#include "probex/distribution.h"
#include "probex/model.h"
#include "probex/value_function.h"

namespace probex::testing {

using ModelPtr = std::shared_ptr<const Model>;
using DistPtr = std::shared_ptr<const Distribution>;

inline ModelPtr Table(int n, std::vector<int> outputs) {
  const Domains d = Domains::Binary(n);
  return std::make_shared<const Model>(d, TruthTable(std::move(outputs), d));
}

// (x0 | x1) & x2
inline ModelPtr AndOr3() { return Table(3, {0, 0, 0, 1, 0, 1, 0, 1}); }
// x0 | x1
inline ModelPtr Or2() { return Table(2, {0, 1, 1, 1}); }
// x0 | (x1 & x2)
inline ModelPtr OrAnd3() { return Table(3, {0, 0, 0, 1, 1, 1, 1, 1}); }
// x0
inline ModelPtr First2() { return Table(2, {0, 0, 1, 1}); }

inline ModelPtr Majority(int n) {
  std::vector<int> out(std::size_t{1} << n);
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = 2 * std::popcount(m) > n ? 1 : 0;
  return Table(n, std::move(out));
}

inline DistPtr Uniform(int n) {
  return std::make_shared<const Distribution>(ProductDistribution::Uniform(Domains::Binary(n)));
}

inline DistPtr Empirical(std::vector<FeatureVector> rows, const Domains& d) {
  return std::make_shared<const Distribution>(EmpiricalDistribution(std::move(rows), d));
}

// Joint table with masses 4/10, 2/10, 1/10, 3/10 on 00, 01, 10, 11.
inline DistPtr CorrelatedPair() {
  std::vector<FeatureVector> rows;
  auto add = [&](int count, FeatureVector x) {
    for (int c = 0; c < count; ++c) rows.push_back(x);
  };
  add(4, {0, 0});
  add(2, {0, 1});
  add(1, {1, 0});
  add(3, {1, 1});
  return Empirical(std::move(rows), Domains::Binary(2));
}

inline ValueFunction Value(Mode mode, ModelPtr model, DistPtr dist,
                           std::optional<FeatureVector> x = std::nullopt, EvalOptions options = {}) {
  return ValueFunction(mode, std::move(model), std::move(dist), std::move(x), Semantics::kConditional,
                       options);
}

inline Rational R(long long p, long long q = 1) { return Rational(p) / Rational(q); }

}  // namespace probex::testing

#endif  // PROBEX_TESTS_INSTANCES_H_
