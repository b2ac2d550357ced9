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

#include "probex/model.h"

#include <algorithm>
#include <limits>
#include <set>

#include "probex/errors.h"
#include "probex/feature_set.h"

namespace probex {

// ---------------------------------------------------------------- Domains

Domains::Domains(std::vector<std::vector<int>> values) : values_(std::move(values)) {
  for (std::size_t f = 0; f < values_.size(); ++f) {
    auto& v = values_[f];
    if (v.empty()) {
      throw Error(ErrorCode::kInvalidInput, "feature " + std::to_string(f) + " has an empty domain");
    }
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw Error(ErrorCode::kInvalidInput,
                  "feature " + std::to_string(f) + " has duplicate domain values");
    }
  }
}

Domains Domains::Binary(int n) { return Domains(std::vector<std::vector<int>>(n, {0, 1})); }

int Domains::IndexOf(int feature, int value) const {
  const auto& v = values_[feature];
  const auto it = std::lower_bound(v.begin(), v.end(), value);
  if (it == v.end() || *it != value) return -1;
  return static_cast<int>(it - v.begin());
}

bool Domains::IsBinary() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const std::vector<int>& v) { return v == std::vector<int>{0, 1}; });
}

std::uint64_t Domains::TotalSize() const {
  std::uint64_t total = 1;
  for (const auto& v : values_) {
    if (total > std::numeric_limits<std::uint64_t>::max() / v.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= v.size();
  }
  return total;
}

void Domains::Validate(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != num_features()) {
    throw Error(ErrorCode::kInvalidInput, "feature vector has length " + std::to_string(x.size()) +
                                              ", expected " + std::to_string(num_features()));
  }
  for (int f = 0; f < num_features(); ++f) {
    if (IndexOf(f, x[f]) < 0) {
      throw Error(ErrorCode::kInvalidInput, "value " + std::to_string(x[f]) +
                                                " outside the domain of feature " +
                                                std::to_string(f));
    }
  }
}

std::uint64_t LinearIndex(std::span<const int> x, const Domains& domains) {
  std::uint64_t index = 0;
  for (int f = 0; f < domains.num_features(); ++f) {
    index = index * static_cast<std::uint64_t>(domains.size(f)) +
            static_cast<std::uint64_t>(domains.IndexOf(f, x[f]));
  }
  return index;
}

ClassLabel Classifier::Predict(std::span<const int> x) const {
  domains().Validate(x);
  return PredictUnchecked(x);
}

// ----------------------------------------------------------- DecisionTree

DecisionTree::DecisionTree(std::vector<Node> nodes, const Domains& domains)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw Error(ErrorCode::kInvalidInput, "decision tree has no nodes");
  const int count = static_cast<int>(nodes_.size());
  for (int id = 0; id < count; ++id) {
    const Node& node = nodes_[id];
    if (node.is_leaf()) {
      if (node.label < 0) throw Error(ErrorCode::kInvalidInput, "negative class label");
      if (!node.children.empty()) {
        throw Error(ErrorCode::kInvalidInput, "leaf node " + std::to_string(id) + " has children");
      }
      continue;
    }
    if (node.feature >= domains.num_features()) {
      throw Error(ErrorCode::kInvalidInput, "node " + std::to_string(id) + " splits on unknown feature " +
                                                std::to_string(node.feature));
    }
    if (static_cast<int>(node.children.size()) != domains.size(node.feature)) {
      throw Error(ErrorCode::kInvalidInput,
                  "node " + std::to_string(id) + " needs one child per value of feature " +
                      std::to_string(node.feature));
    }
    for (int child : node.children) {
      if (child <= id || child >= count) {
        throw Error(ErrorCode::kInvalidInput, "node " + std::to_string(id) + " has invalid child");
      }
    }
  }
  // Each feature at most once per path: propagate the set of features tested
  // on the way down. Nodes reachable through several parents are checked once
  // per distinct incoming path set.
  std::vector<std::set<std::vector<bool>>> seen(count);
  std::vector<std::pair<int, std::vector<bool>>> stack = {{0, std::vector<bool>(domains.num_features())}};
  while (!stack.empty()) {
    auto [id, used] = std::move(stack.back());
    stack.pop_back();
    if (!seen[id].insert(used).second) continue;
    const Node& node = nodes_[id];
    if (node.is_leaf()) continue;
    if (used[node.feature]) {
      throw Error(ErrorCode::kInvalidInput, "feature " + std::to_string(node.feature) +
                                                " repeats along a path at node " + std::to_string(id));
    }
    used[node.feature] = true;
    for (int child : node.children) stack.emplace_back(child, used);
  }
}

DecisionTree DecisionTree::Constant(ClassLabel label) {
  Node leaf;
  leaf.label = label;
  return DecisionTree(std::vector<Node>{leaf});
}

ClassLabel DecisionTree::Predict(std::span<const int> x, const Domains& domains) const {
  int id = 0;
  while (!nodes_[id].is_leaf()) {
    const Node& node = nodes_[id];
    id = node.children[domains.IndexOf(node.feature, x[node.feature])];
  }
  return nodes_[id].label;
}

std::vector<Leaf> DecisionTree::Leaves(const Domains& domains) const {
  const int num_features = domains.num_features();
  std::vector<Leaf> out;
  struct Frame {
    int id;
    ConstraintMap constraints;
  };
  std::vector<Frame> stack = {{0, ConstraintMap(num_features)}};
  // Depth-first, children visited in domain order.
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    const Node& node = nodes_[frame.id];
    if (node.is_leaf()) {
      out.push_back({std::move(frame.constraints), node.label});
      continue;
    }
    for (int k = static_cast<int>(node.children.size()) - 1; k >= 0; --k) {
      Frame next{node.children[k], frame.constraints};
      next.constraints[node.feature] = domains.values(node.feature)[k];
      stack.push_back(std::move(next));
    }
  }
  return out;
}

ClassLabel DecisionTree::MaxLabel() const {
  ClassLabel best = 0;
  for (const Node& n : nodes_) {
    if (n.is_leaf()) best = std::max(best, n.label);
  }
  return best;
}

// ----------------------------------------------------------- TreeEnsemble

TreeEnsemble::TreeEnsemble(std::vector<DecisionTree> trees, Voting voting,
                           std::vector<Rational> weights)
    : trees_(std::move(trees)), voting_(voting), weights_(std::move(weights)) {
  if (trees_.empty()) throw Error(ErrorCode::kInvalidInput, "ensemble has no trees");
  if (voting_ == Voting::kWeighted && weights_.size() != trees_.size()) {
    throw Error(ErrorCode::kInvalidInput, "weighted ensemble needs one weight per tree");
  }
  if (voting_ == Voting::kMajority && !weights_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "majority ensemble takes no weights");
  }
}

ClassLabel TreeEnsemble::Predict(std::span<const int> x, const Domains& domains,
                                 int num_classes) const {
  std::vector<Rational> tally(num_classes);
  for (std::size_t t = 0; t < trees_.size(); ++t) {
    const ClassLabel vote = trees_[t].Predict(x, domains);
    tally[vote] += voting_ == Voting::kWeighted ? weights_[t] : Rational(1);
  }
  // std::max_element returns the first maximum, i.e. the lowest class index.
  return static_cast<ClassLabel>(std::max_element(tally.begin(), tally.end()) - tally.begin());
}

ClassLabel TreeEnsemble::MaxLabel() const {
  ClassLabel best = 0;
  for (const auto& t : trees_) best = std::max(best, t.MaxLabel());
  return best;
}

// ---------------------------------------------------------- OrthogonalDnf

OrthogonalDnf::OrthogonalDnf(std::vector<Term> terms, int num_features)
    : terms_(std::move(terms)), num_features_(num_features) {
  std::vector<ConstraintMap> maps;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    ConstraintMap map(num_features_);
    for (const auto& [feature, value] : terms_[t]) {
      if (feature < 0 || feature >= num_features_ || (value != 0 && value != 1)) {
        throw Error(ErrorCode::kInvalidInput, "term " + std::to_string(t) + " has an invalid literal");
      }
      if (map[feature] && *map[feature] != value) {
        throw Error(ErrorCode::kInvalidInput,
                    "term " + std::to_string(t) + " is contradictory on feature " + std::to_string(feature));
      }
      map[feature] = value;
    }
    maps.push_back(std::move(map));
  }
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = a + 1; b < maps.size(); ++b) {
      bool conflict = false;
      for (int f = 0; f < num_features_ && !conflict; ++f) {
        conflict = maps[a][f] && maps[b][f] && *maps[a][f] != *maps[b][f];
      }
      if (!conflict) {
        throw Error(ErrorCode::kInvalidInput, "terms " + std::to_string(a) + " and " +
                                                  std::to_string(b) + " are not orthogonal");
      }
    }
  }
}

ClassLabel OrthogonalDnf::Predict(std::span<const int> x) const {
  for (const Term& term : terms_) {
    if (std::all_of(term.begin(), term.end(),
                    [&](const Literal& lit) { return x[lit.first] == lit.second; })) {
      return 1;
    }
  }
  return 0;
}

std::vector<ConstraintMap> OrthogonalDnf::Terms() const {
  std::vector<ConstraintMap> out;
  for (const Term& term : terms_) {
    ConstraintMap map(num_features_);
    for (const auto& [feature, value] : term) map[feature] = value;
    out.push_back(std::move(map));
  }
  return out;
}

// ------------------------------------------------------------- TruthTable

TruthTable::TruthTable(std::vector<ClassLabel> outputs, const Domains& domains)
    : outputs_(std::move(outputs)) {
  if (outputs_.size() != domains.TotalSize()) {
    throw Error(ErrorCode::kInvalidInput, "truth table has " + std::to_string(outputs_.size()) +
                                              " entries, domain has " +
                                              std::to_string(domains.TotalSize()));
  }
  for (ClassLabel c : outputs_) {
    if (c < 0) throw Error(ErrorCode::kInvalidInput, "negative class label in truth table");
  }
}

ClassLabel TruthTable::Predict(std::span<const int> x, const Domains& domains) const {
  return outputs_[LinearIndex(x, domains)];
}

// ------------------------------------------------------------------ Model

Model::Model(Domains domains, ModelBody body, int num_classes)
    : domains_(std::move(domains)), body_(std::move(body)), num_classes_(num_classes) {
  if (domains_.num_features() > kMaxFeatures) {
    throw Error(ErrorCode::kInvalidInput, "at most " + std::to_string(kMaxFeatures) + " features supported");
  }
  ClassLabel max_label = 0;
  bool binary_output = false;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DecisionTree> || std::is_same_v<T, TreeEnsemble>) {
          max_label = m.MaxLabel();
        } else if constexpr (std::is_same_v<T, TruthTable>) {
          for (ClassLabel c : m.outputs()) max_label = std::max(max_label, c);
        } else {
          binary_output = true;
          max_label = 1;
        }
      },
      body_);
  if (binary_output && !domains_.IsBinary()) {
    throw Error(ErrorCode::kInvalidInput, TypeName() + " requires binary {0,1} feature domains");
  }
  if (const auto* mlp = get_if<ReluMlp>()) {
    if (mlp->layers().front().weights.rows() != domains_.num_features()) {
      throw Error(ErrorCode::kInvalidInput, "mlp input width differs from n_features");
    }
  }
  if (num_classes_ <= 0) num_classes_ = binary_output ? 2 : max_label + 1;
  if (max_label >= num_classes_) {
    throw Error(ErrorCode::kInvalidInput, "class label " + std::to_string(max_label) +
                                              " exceeds n_classes " + std::to_string(num_classes_));
  }
}

ClassLabel Model::PredictUnchecked(std::span<const int> x) const {
  return std::visit(
      [&](const auto& m) -> ClassLabel {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DecisionTree> || std::is_same_v<T, TruthTable>) {
          return m.Predict(x, domains_);
        } else if constexpr (std::is_same_v<T, TreeEnsemble>) {
          return m.Predict(x, domains_, num_classes_);
        } else {
          return m.Predict(x);
        }
      },
      body_);
}

std::string Model::TypeName() const {
  static constexpr const char* kNames[] = {"decision_tree", "ensemble", "mlp", "odnf", "truth_table"};
  return kNames[body_.index()];
}

// ------------------------------------------------------------ DomainRange

DomainRange::DomainRange(const Domains& domains, std::uint64_t cap)
    : domains_(domains), size_(domains.TotalSize()) {
  if (size_ > cap) {
    throw Error(ErrorCode::kDomainTooLarge,
                "domain has " + (size_ == std::numeric_limits<std::uint64_t>::max()
                                     ? std::string("more than 2^64")
                                     : std::to_string(size_)) +
                    " points, cap is " + std::to_string(cap));
  }
}

DomainRange::Iterator::Iterator(const Domains* domains, bool at_end)
    : domains_(domains), done_(at_end) {
  if (done_) return;
  index_.assign(domains_->num_features(), 0);
  point_.resize(domains_->num_features());
  for (int f = 0; f < domains_->num_features(); ++f) point_[f] = domains_->values(f)[0];
}

DomainRange::Iterator& DomainRange::Iterator::operator++() {
  for (int f = domains_->num_features() - 1; f >= 0; --f) {
    if (++index_[f] < domains_->size(f)) {
      point_[f] = domains_->values(f)[index_[f]];
      return *this;
    }
    index_[f] = 0;
    point_[f] = domains_->values(f)[0];
  }
  done_ = true;
  return *this;
}

}  // namespace probex
