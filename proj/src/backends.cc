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

#include <unordered_map>

#include "probex/errors.h"
#include "probex/parallel.h"
#include "probex/value_function.h"

namespace probex {

Rational EvalGlobalSuffEmpirical(const Classifier& model, const EmpiricalDistribution& dataset,
                                 FeatureSet s, int jobs,
                                 std::span<const ClassLabel> row_predictions) {
  const int size = dataset.size();
  std::vector<ClassLabel> computed;
  if (row_predictions.empty()) {
    computed.reserve(size);
    for (const auto& row : dataset.rows()) computed.push_back(model.PredictUnchecked(row));
    row_predictions = computed;
  }
  // One partial sum per row; rational addition makes the total independent of
  // how rows are split across workers.
  std::vector<Rational> partial(size);
  ParallelFor(static_cast<std::size_t>(size), jobs, [&](std::size_t x) {
    const std::vector<int> match = dataset.MatchingRows(dataset.row(static_cast<int>(x)), s);
    int agree = 0;
    for (int z : match) agree += row_predictions[z] == row_predictions[x] ? 1 : 0;
    partial[x] = Rational(agree, static_cast<int>(match.size()));
  });
  Rational total = 0;
  for (const Rational& p : partial) total += p;
  return total / size;
}

namespace {

Rational IntersectionMass(const ProductDistribution& dist, int feature, const std::optional<int>& a,
                          const std::optional<int>& b) {
  if (!a) return dist.ConstraintMass(feature, b);
  if (!b || *a == *b) return dist.ConstraintMass(feature, a);
  return 0;
}

const ProductDistribution& RequireProduct(const Distribution& dist, const char* backend) {
  const auto* product = dist.product();
  if (product == nullptr) {
    throw Error(ErrorCode::kBackendMismatch,
                std::string(backend) + " backend needs a product distribution");
  }
  return *product;
}

template <typename Body>
const Body& RequireBody(const Classifier& model, const char* backend, const char* family) {
  const auto* m = dynamic_cast<const Model*>(&model);
  const Body* body = m == nullptr ? nullptr : m->get_if<Body>();
  if (body == nullptr) {
    throw Error(ErrorCode::kBackendMismatch, std::string(backend) + " backend needs " + family);
  }
  return *body;
}

}  // namespace

Rational SameLabelPairMass(std::span<const Leaf> items, const ProductDistribution& dist,
                           FeatureSet s) {
  const int n = dist.num_features();
  // Mass of each item restricted to the unconditioned coordinates.
  std::vector<Rational> outside(items.size(), Rational(1));
  for (std::size_t a = 0; a < items.size(); ++a) {
    for (int f = 0; f < n; ++f) {
      if (!s.contains(f)) outside[a] *= dist.ConstraintMass(f, items[a].constraints[f]);
    }
  }
  Rational total = 0;
  for (std::size_t a = 0; a < items.size(); ++a) {
    if (outside[a] == 0) continue;
    for (std::size_t b = 0; b < items.size(); ++b) {
      if (items[a].label != items[b].label || outside[b] == 0) continue;
      Rational shared = outside[a] * outside[b];
      for (int f : s) {
        shared *= IntersectionMass(dist, f, items[a].constraints[f], items[b].constraints[f]);
        if (shared == 0) break;
      }
      total += shared;
    }
  }
  return total;
}

Rational EvalGlobalSuffLeafPairs(const Classifier& model, const Distribution& dist, FeatureSet s) {
  const auto& tree = RequireBody<DecisionTree>(model, "leaf-pair", "a decision tree");
  const ProductDistribution& product = RequireProduct(dist, "leaf-pair");
  const std::vector<Leaf> leaves = tree.Leaves(model.domains());
  return SameLabelPairMass(leaves, product, s);
}

Rational EvalGlobalSuffTermPairs(const Classifier& model, const Distribution& dist, FeatureSet s) {
  const auto& dnf = RequireBody<OrthogonalDnf>(model, "term-pair", "an orthogonal DNF");
  const ProductDistribution& product = RequireProduct(dist, "term-pair");
  std::vector<Leaf> terms;
  for (auto& map : dnf.Terms()) terms.push_back({std::move(map), 1});
  const Rational both_one = SameLabelPairMass(terms, product, s);
  // Terms are disjoint, so Pr(f = 1) is the plain sum of term masses.
  Rational positive = 0;
  for (const Leaf& term : terms) {
    Rational mass = 1;
    for (int f = 0; f < product.num_features(); ++f) mass *= product.ConstraintMass(f, term.constraints[f]);
    positive += mass;
  }
  const Rational both_zero = 1 - 2 * positive + both_one;
  return both_one + both_zero;
}

Rational EvalGlobalSuffBruteForce(const Classifier& model, const Distribution& dist, FeatureSet s,
                                  std::uint64_t domain_cap) {
  const Domains& domains = model.domains();
  const int classes = model.num_classes();
  struct Group {
    Rational total = 0;
    std::vector<Rational> per_class;
  };
  std::unordered_map<std::uint64_t, Group> groups;
  for (const FeatureVector& x : DomainRange(domains, domain_cap)) {
    const Rational mass = dist.PointMass(x);
    if (mass == 0) continue;
    std::uint64_t key = 0;
    for (int f : s) key = key * static_cast<std::uint64_t>(domains.size(f)) + domains.IndexOf(f, x[f]);
    Group& g = groups[key];
    if (g.per_class.empty()) g.per_class.assign(classes, Rational(0));
    g.total += mass;
    g.per_class[model.PredictUnchecked(x)] += mass;
  }
  // sum_groups sum_c Pr(group, c)^2 / Pr(group)
  Rational value = 0;
  for (const auto& [key, g] : groups) {
    Rational squares = 0;
    for (const Rational& m : g.per_class) squares += m * m;
    value += squares / g.total;
  }
  return value;
}

}  // namespace probex
