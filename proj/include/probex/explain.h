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

#ifndef PROBEX_EXPLAIN_H_
#define PROBEX_EXPLAIN_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "probex/distribution.h"
#include "probex/feature_set.h"
#include "probex/model_view.h"
#include "probex/rational.h"
#include "probex/value_function.h"

namespace probex {

enum class Objective { kSubsetMinimal, kCardinalGreedy, kCardinalExact };

std::string ObjectiveName(Objective objective);

inline constexpr int kDefaultCardinalCap = 16;
inline constexpr int kDefaultEnumerationCap = 14;

struct ExplanationQuery {
  const SetFunction& value;
  Rational delta;
  Objective objective = Objective::kSubsetMinimal;
  // Parallel width of the per-iteration candidate scans.
  int jobs = 1;
};

struct ExplanationResult {
  FeatureSet subset;
  Rational value;
  Rational delta;
  Objective objective = Objective::kSubsetMinimal;
  // Subset-minimal: v is known monotone. Cardinal-exact: always. Greedy: never.
  bool certified = false;
  std::optional<double> bound;
  int iterations = 0;
};

// Top-down removal. Starts at [n]; while some i in S keeps v(S \ {i}) >= delta,
// drops the i maximising v(S \ {i}) (lowest index on ties). Throws
// kUnsatisfiable when v([n]) < delta.
ExplanationResult SubsetMinimalGreedy(const ExplanationQuery& query);

// Bottom-up addition. Returns the empty set when v({}) >= delta, otherwise
// adds argmax_{i not in S} v(S + i) (lowest index on ties) until v(S) >= delta.
ExplanationResult CardinalGreedy(const ExplanationQuery& query);

// Size-then-lexicographic scan; first S with v(S) >= delta.
ExplanationResult BruteForceCardinalMin(const ExplanationQuery& query, int cap = kDefaultCardinalCap);

// Dispatch on query.objective.
ExplanationResult Explain(const ExplanationQuery& query);

// Every subset-minimal delta-explanation in size-lexicographic order. For a
// known-monotone v only immediate subsets are checked; otherwise every proper
// subset is.
std::vector<FeatureSet> EnumerateSubsetMinimal(const SetFunction& v, const Rational& delta,
                                               int cap = kDefaultEnumerationCap);

// Total curvature k = 1 - min_i (v([n]) - v([n] \ i)) / (v({i}) - v({})).
struct Curvature {
  Rational value;
  std::vector<Rational> ratios;  // per feature
};

// Throws kRequiresPreprocessing when some v({i}) - v({}) is not positive.
Curvature ComputeCurvature(const SetFunction& v);

enum class BoundKind { kContrastive, kSufficient };

// Contrastive: ln(v([n]) / min_i v({i})).
// Sufficient:  1 / (1 - k) + ln(v([n]) / min_i v({i})).
double ApproxBound(const SetFunction& v, BoundKind kind);

// Features whose dataset-pair substitution never changes a prediction:
// f(x_{[n] \ i}; z_i) = f(x) for every ordered pair (x, z) in D^2.
struct RedundancySplit {
  FeatureSet surviving;
  FeatureSet removed;
};
RedundancySplit RemoveRedundantFeatures(const Classifier& model, const EmpiricalDistribution& dataset);

// The instance restricted to surviving features: removed ones are pinned to
// dataset row 0 and the rows are projected.
struct ReducedInstance {
  std::shared_ptr<const MaskedModel> model;
  std::shared_ptr<const Distribution> distribution;
  RedundancySplit split;
};
ReducedInstance Preprocess(std::shared_ptr<const Classifier> model, const EmpiricalDistribution& dataset);

}  // namespace probex

#endif  // PROBEX_EXPLAIN_H_
