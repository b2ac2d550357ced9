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

#include "probex/explain.h"

#include <algorithm>
#include <cmath>

#include "probex/errors.h"
#include "probex/parallel.h"

namespace probex {

std::string ObjectiveName(Objective objective) {
  switch (objective) {
    case Objective::kSubsetMinimal: return "subset-minimal";
    case Objective::kCardinalGreedy: return "cardinal-approx";
    case Objective::kCardinalExact: return "cardinal-exact";
  }
  return "unknown";
}

namespace {

void RequireSatisfiable(const SetFunction& v, const Rational& delta) {
  const int n = v.num_features();
  const Rational top = v(FeatureSet::Full(n));
  if (top < delta) {
    throw Error(ErrorCode::kUnsatisfiable,
                "v([n]) = " + ToString(top) + " < delta = " + ToString(delta));
  }
}

struct Candidate {
  int feature = -1;
  Rational value;
};

// Evaluates every candidate (possibly in parallel) and returns the best one,
// the lowest feature index winning ties.
Candidate BestCandidate(const std::vector<int>& features, const std::vector<FeatureSet>& sets,
                        const SetFunction& v, int jobs) {
  std::vector<Rational> values(sets.size());
  ParallelFor(sets.size(), jobs, [&](std::size_t k) { values[k] = v(sets[k]); });
  Candidate best;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (best.feature < 0 || values[k] > best.value) best = {features[k], values[k]};
  }
  return best;
}

ExplanationResult Finish(const ExplanationQuery& q, FeatureSet s, int iterations, bool certified) {
  ExplanationResult r;
  r.subset = s;
  r.value = q.value(s);
  r.delta = q.delta;
  r.objective = q.objective;
  r.certified = certified;
  r.iterations = iterations;
  if (r.value < q.delta) {
    throw Error(ErrorCode::kUnsatisfiable, "internal: returned set violates delta");
  }
  return r;
}

}  // namespace

ExplanationResult SubsetMinimalGreedy(const ExplanationQuery& query) {
  const SetFunction& v = query.value;
  RequireSatisfiable(v, query.delta);
  FeatureSet s = FeatureSet::Full(v.num_features());
  int iterations = 0;
  while (!s.empty()) {
    std::vector<int> features = s.indices();
    std::vector<FeatureSet> sets;
    for (int i : features) sets.push_back(s.without(i));
    const Candidate best = BestCandidate(features, sets, v, query.jobs);
    if (best.value < query.delta) break;
    s = s.without(best.feature);
    ++iterations;
  }
  return Finish(query, s, iterations, v.known_monotone());
}

ExplanationResult CardinalGreedy(const ExplanationQuery& query) {
  const SetFunction& v = query.value;
  RequireSatisfiable(v, query.delta);
  const int n = v.num_features();
  FeatureSet s;
  int iterations = 0;
  while (v(s) < query.delta) {
    std::vector<int> features = s.complement(n).indices();
    std::vector<FeatureSet> sets;
    for (int i : features) sets.push_back(s.with(i));
    const Candidate best = BestCandidate(features, sets, v, query.jobs);
    s = s.with(best.feature);
    ++iterations;
  }
  return Finish(query, s, iterations, false);
}

ExplanationResult BruteForceCardinalMin(const ExplanationQuery& query, int cap) {
  const SetFunction& v = query.value;
  const int n = v.num_features();
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "exhaustive search over n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  RequireSatisfiable(v, query.delta);
  for (int k = 0; k <= n; ++k) {
    for (FeatureSet s : Combinations(n, k)) {
      if (v(s) >= query.delta) return Finish(query, s, 0, true);
    }
  }
  throw Error(ErrorCode::kUnsatisfiable, "no subset reaches delta");
}

ExplanationResult Explain(const ExplanationQuery& query) {
  switch (query.objective) {
    case Objective::kSubsetMinimal: return SubsetMinimalGreedy(query);
    case Objective::kCardinalGreedy: return CardinalGreedy(query);
    case Objective::kCardinalExact: return BruteForceCardinalMin(query);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown objective");
}

std::vector<FeatureSet> EnumerateSubsetMinimal(const SetFunction& v, const Rational& delta, int cap) {
  const int n = v.num_features();
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "enumeration over n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> satisfies(count);
  for (std::size_t m = 0; m < count; ++m) satisfies[m] = v(FeatureSet::FromMask(m)) >= delta;

  std::vector<char> blocked(count, 0);  // some proper subset satisfies
  if (v.known_monotone()) {
    for (std::size_t m = 0; m < count; ++m) {
      for (int i : FeatureSet::FromMask(m)) {
        if (satisfies[m & ~(std::size_t{1} << i)]) {
          blocked[m] = 1;
          break;
        }
      }
    }
  } else {
    // below[m]: some subset of m (m included) satisfies; superset-sum DP.
    std::vector<char> below(satisfies);
    for (int i = 0; i < n; ++i) {
      for (std::size_t m = 0; m < count; ++m) {
        if (m >> i & 1U) below[m] |= below[m & ~(std::size_t{1} << i)];
      }
    }
    for (std::size_t m = 0; m < count; ++m) {
      for (int i : FeatureSet::FromMask(m)) {
        if (below[m & ~(std::size_t{1} << i)]) {
          blocked[m] = 1;
          break;
        }
      }
    }
  }
  std::vector<FeatureSet> out;
  for (std::size_t m = 0; m < count; ++m) {
    if (satisfies[m] && !blocked[m]) out.push_back(FeatureSet::FromMask(m));
  }
  std::sort(out.begin(), out.end(), SizeLexLess);
  return out;
}

Curvature ComputeCurvature(const SetFunction& v) {
  const int n = v.num_features();
  if (n == 0) throw Error(ErrorCode::kRequiresPreprocessing, "curvature needs at least one feature");
  const FeatureSet full = FeatureSet::Full(n);
  const Rational top = v(full);
  const Rational bottom = v(FeatureSet());
  Curvature c;
  for (int i = 0; i < n; ++i) {
    const Rational low_gain = v(FeatureSet{i}) - bottom;
    if (low_gain <= 0) {
      throw Error(ErrorCode::kRequiresPreprocessing,
                  "v({" + std::to_string(i) + "}) - v({}) = " + ToString(low_gain) + " is not positive");
    }
    c.ratios.push_back((top - v(full.without(i))) / low_gain);
  }
  c.value = 1 - *std::min_element(c.ratios.begin(), c.ratios.end());
  return c;
}

double ApproxBound(const SetFunction& v, BoundKind kind) {
  const int n = v.num_features();
  if (n == 0) throw Error(ErrorCode::kRequiresPreprocessing, "bound needs at least one feature");
  Rational smallest = v(FeatureSet{0});
  for (int i = 1; i < n; ++i) smallest = std::min(smallest, v(FeatureSet{i}));
  if (smallest <= 0) {
    throw Error(ErrorCode::kRequiresPreprocessing, "min_i v({i}) = " + ToString(smallest));
  }
  const double log_term = Log(v(FeatureSet::Full(n)) / smallest);
  if (kind == BoundKind::kContrastive) return log_term;
  const Curvature c = ComputeCurvature(v);
  return 1.0 / ToDouble(1 - c.value) + log_term;
}

}  // namespace probex
