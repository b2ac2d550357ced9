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

#include "probex/generators.h"

#include <algorithm>
#include <numeric>

#include "probex/errors.h"

namespace probex {

int UniformInt(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Domains RandomDomains(Rng& rng, int n, int max_size) {
  std::vector<std::vector<int>> values(n);
  for (auto& v : values) {
    v.resize(UniformInt(rng, 2, std::max(2, max_size)));
    std::iota(v.begin(), v.end(), 0);
  }
  return Domains(std::move(values));
}

namespace {

int GrowTree(Rng& rng, const Domains& domains, int depth, int num_classes, std::vector<char>& used,
             std::vector<DecisionTree::Node>& out) {
  const int index = static_cast<int>(out.size());
  out.emplace_back();
  std::vector<int> free;
  for (int f = 0; f < domains.num_features(); ++f) {
    if (!used[f]) free.push_back(f);
  }
  // Split with probability 3/4 while depth and features remain.
  if (depth == 0 || free.empty() || UniformInt(rng, 0, 3) == 0) {
    out[index].label = UniformInt(rng, 0, num_classes - 1);
    return index;
  }
  const int feature = free[UniformInt(rng, 0, static_cast<int>(free.size()) - 1)];
  used[feature] = 1;
  std::vector<int> children;
  for (int k = 0; k < domains.size(feature); ++k) {
    children.push_back(GrowTree(rng, domains, depth - 1, num_classes, used, out));
  }
  used[feature] = 0;
  out[index].feature = feature;
  out[index].children = std::move(children);
  return index;
}

}  // namespace

DecisionTree RandomTree(Rng& rng, const Domains& domains, int max_depth, int num_classes,
                        FeatureSet allowed) {
  std::vector<char> used(domains.num_features(), 0);
  if (!allowed.empty()) {
    for (int f = 0; f < domains.num_features(); ++f) used[f] = !allowed.contains(f);
  }
  std::vector<DecisionTree::Node> nodes;
  GrowTree(rng, domains, max_depth, num_classes, used, nodes);
  return DecisionTree(std::move(nodes), domains);
}

Model RandomTreeModel(Rng& rng, const Domains& domains, int max_depth, int num_classes,
                      FeatureSet allowed) {
  return Model(domains, RandomTree(rng, domains, max_depth, num_classes, allowed), num_classes);
}

Model RandomEnsembleModel(Rng& rng, const Domains& domains, int trees, int max_depth, int num_classes) {
  std::vector<DecisionTree> members;
  std::vector<Rational> weights;
  for (int t = 0; t < trees; ++t) {
    members.push_back(RandomTree(rng, domains, max_depth, num_classes));
    weights.emplace_back(UniformInt(rng, 1, 5), UniformInt(rng, 1, 3));
  }
  const bool weighted = UniformInt(rng, 0, 1) == 1;
  return Model(domains,
               TreeEnsemble(std::move(members), weighted ? Voting::kWeighted : Voting::kMajority,
                            weighted ? weights : std::vector<Rational>{}),
               num_classes);
}

Model RandomTruthTableModel(Rng& rng, const Domains& domains, int num_classes) {
  std::vector<ClassLabel> outputs(domains.TotalSize());
  for (auto& o : outputs) o = UniformInt(rng, 0, num_classes - 1);
  return Model(domains, TruthTable(std::move(outputs), domains), num_classes);
}

Model RandomOdnfModel(Rng& rng, int n, int max_depth) {
  const Domains domains = Domains::Binary(n);
  const DecisionTree tree = RandomTree(rng, domains, max_depth, 2);
  std::vector<OrthogonalDnf::Term> terms;
  for (const Leaf& leaf : tree.Leaves(domains)) {
    if (leaf.label != 1) continue;
    OrthogonalDnf::Term term;
    for (int f = 0; f < n; ++f) {
      if (leaf.constraints[f]) term.emplace_back(f, *leaf.constraints[f]);
    }
    terms.push_back(std::move(term));
  }
  return Model(domains, OrthogonalDnf(std::move(terms), n));
}

Model RandomMlpModel(Rng& rng, int n, int hidden) {
  auto weight = [&] { return Rational(UniformInt(rng, -4, 4), UniformInt(rng, 1, 3)); };
  ReluMlp::Layer first;
  first.weights.resize(n, hidden);
  first.bias.resize(hidden);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < hidden; ++c) first.weights(r, c) = weight();
  }
  for (int c = 0; c < hidden; ++c) first.bias(c) = weight();
  ReluMlp::Layer out;
  out.weights.resize(hidden, 1);
  out.bias.resize(1);
  for (int r = 0; r < hidden; ++r) out.weights(r, 0) = weight();
  out.bias(0) = weight();
  std::vector<ReluMlp::Layer> layers;
  layers.push_back(std::move(first));
  layers.push_back(std::move(out));
  return Model(Domains::Binary(n), ReluMlp(std::move(layers), n));
}

ProductDistribution RandomProduct(Rng& rng, const Domains& domains, int denominator) {
  std::vector<std::vector<Rational>> marginals;
  for (int f = 0; f < domains.num_features(); ++f) {
    const int k = domains.size(f);
    const int total = std::max(denominator, k);
    // Stars and bars with at least one unit per value.
    std::vector<int> cuts;
    for (int c = 1; c < total; ++c) cuts.push_back(c);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(total);
    std::vector<Rational> m;
    for (int v = 0; v < k; ++v) m.emplace_back(cuts[v + 1] - cuts[v], total);
    marginals.push_back(std::move(m));
  }
  return ProductDistribution(domains, std::move(marginals));
}

EmpiricalDistribution RandomDataset(Rng& rng, const Domains& domains, int rows) {
  std::vector<FeatureVector> data(rows, FeatureVector(domains.num_features()));
  for (auto& row : data) {
    for (int f = 0; f < domains.num_features(); ++f) {
      row[f] = domains.values(f)[UniformInt(rng, 0, domains.size(f) - 1)];
    }
  }
  return EmpiricalDistribution(std::move(data), domains);
}

FeatureSet VaryingFeatures(const EmpiricalDistribution& dataset) {
  FeatureSet out;
  for (int f = 0; f < dataset.num_features(); ++f) {
    for (const auto& row : dataset.rows()) {
      if (row[f] != dataset.row(0)[f]) {
        out = out.with(f);
        break;
      }
    }
  }
  return out;
}

EmpiricalDistribution ProductGridDataset(Rng& rng, const Domains& domains, int max_rows) {
  const int n = domains.num_features();
  std::vector<std::vector<int>> support(n);
  long long size = 1;
  // Feature order is shuffled so growth is not biased toward low indices.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int f = 0; f < n; ++f) {
    support[f] = {domains.values(f)[UniformInt(rng, 0, domains.size(f) - 1)]};
  }
  for (int f : order) {
    std::vector<int> rest;
    for (int v : domains.values(f)) {
      if (v != support[f][0]) rest.push_back(v);
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    const int extra = UniformInt(rng, 0, static_cast<int>(rest.size()));
    for (int e = 0; e < extra && size / static_cast<long long>(support[f].size()) *
                                         static_cast<long long>(support[f].size() + 1) <= max_rows;
         ++e) {
      size = size / static_cast<long long>(support[f].size()) * static_cast<long long>(support[f].size() + 1);
      support[f].push_back(rest[e]);
    }
    std::sort(support[f].begin(), support[f].end());
  }
  std::vector<FeatureVector> rows(1, FeatureVector{});
  for (int f = 0; f < n; ++f) {
    std::vector<FeatureVector> next;
    for (const auto& prefix : rows) {
      for (int v : support[f]) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    }
    rows = std::move(next);
  }
  return EmpiricalDistribution(std::move(rows), domains);
}

}  // namespace probex
