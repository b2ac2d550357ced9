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

#ifndef PROBEX_MODEL_H_
#define PROBEX_MODEL_H_

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "probex/rational.h"
#include "probex/relu_network.h"

namespace probex {

using FeatureVector = std::vector<int>;
using ClassLabel = int;

inline constexpr std::uint64_t kDefaultDomainCap = std::uint64_t{1} << 20;

// Finite per-feature value sets. Values are kept sorted ascending, which
// fixes both the lexicographic enumeration order and the marginal layout.
class Domains {
 public:
  Domains() = default;
  explicit Domains(std::vector<std::vector<int>> values);
  static Domains Binary(int n);

  int num_features() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values(int feature) const { return values_[feature]; }
  int size(int feature) const { return static_cast<int>(values_[feature].size()); }
  // Position of `value` inside the domain of `feature`, or -1.
  int IndexOf(int feature, int value) const;
  bool IsBinary() const;
  // Product of domain sizes, saturating at UINT64_MAX.
  std::uint64_t TotalSize() const;
  // Throws kInvalidInput on a length mismatch or an out-of-domain coordinate.
  void Validate(std::span<const int> x) const;

  bool operator==(const Domains&) const = default;

 private:
  std::vector<std::vector<int>> values_;
};

// Restriction a leaf or term places on each feature: pinned value or free.
using ConstraintMap = std::vector<std::optional<int>>;

struct Leaf {
  ConstraintMap constraints;
  ClassLabel label = 0;
};

// Common read-only classifier interface consumed by the evaluators.
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual const Domains& domains() const = 0;
  virtual int num_classes() const = 0;
  int num_features() const { return domains().num_features(); }

  // Validates `x` against the domains, then classifies it.
  ClassLabel Predict(std::span<const int> x) const;
  // Caller guarantees `x` is valid.
  virtual ClassLabel PredictUnchecked(std::span<const int> x) const = 0;
};

class DecisionTree {
 public:
  struct Node {
    int feature = -1;            // -1 marks a leaf
    ClassLabel label = 0;        // leaves only
    std::vector<int> children;   // one per domain value, in domain order
    bool is_leaf() const { return feature < 0; }
  };

  // Node 0 is the root; children must have larger indices than their parent.
  // Throws kInvalidInput when a node is not total over its feature's domain
  // or a feature repeats along a root-to-leaf path.
  DecisionTree(std::vector<Node> nodes, const Domains& domains);

  static DecisionTree Constant(ClassLabel label);

  ClassLabel Predict(std::span<const int> x, const Domains& domains) const;
  // Root-to-leaf constraint maps, depth-first with children in domain order.
  std::vector<Leaf> Leaves(const Domains& domains) const;
  const std::vector<Node>& nodes() const { return nodes_; }
  ClassLabel MaxLabel() const;

 private:
  explicit DecisionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}
  std::vector<Node> nodes_;
};

enum class Voting { kMajority, kWeighted };

class TreeEnsemble {
 public:
  TreeEnsemble(std::vector<DecisionTree> trees, Voting voting, std::vector<Rational> weights = {});

  // Ties resolve to the lowest class index.
  ClassLabel Predict(std::span<const int> x, const Domains& domains, int num_classes) const;

  const std::vector<DecisionTree>& trees() const { return trees_; }
  Voting voting() const { return voting_; }
  const std::vector<Rational>& weights() const { return weights_; }
  ClassLabel MaxLabel() const;

 private:
  std::vector<DecisionTree> trees_;
  Voting voting_;
  std::vector<Rational> weights_;
};

using ReluMlp = ReluNetwork<Rational>;

// Literals are (feature, value) pairs over binary features. A point is
// classified 1 iff it satisfies some term.
class OrthogonalDnf {
 public:
  using Literal = std::pair<int, int>;
  using Term = std::vector<Literal>;

  // Throws kInvalidInput naming the first non-orthogonal term pair.
  OrthogonalDnf(std::vector<Term> terms, int num_features);

  ClassLabel Predict(std::span<const int> x) const;
  std::vector<ConstraintMap> Terms() const;
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
  int num_features_;
};

class TruthTable {
 public:
  TruthTable(std::vector<ClassLabel> outputs, const Domains& domains);

  ClassLabel Predict(std::span<const int> x, const Domains& domains) const;
  const std::vector<ClassLabel>& outputs() const { return outputs_; }

 private:
  std::vector<ClassLabel> outputs_;
};

// Row-major position of `x` in the lexicographic enumeration of the domain.
std::uint64_t LinearIndex(std::span<const int> x, const Domains& domains);

using ModelBody = std::variant<DecisionTree, TreeEnsemble, ReluMlp, OrthogonalDnf, TruthTable>;

class Model final : public Classifier {
 public:
  // `num_classes` <= 0 infers max label + 1 (2 for MLPs and DNFs).
  Model(Domains domains, ModelBody body, int num_classes = 0);

  const Domains& domains() const override { return domains_; }
  int num_classes() const override { return num_classes_; }
  ClassLabel PredictUnchecked(std::span<const int> x) const override;

  const ModelBody& body() const { return body_; }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&body_);
  }
  std::string TypeName() const;

 private:
  Domains domains_;
  ModelBody body_;
  int num_classes_;
};

// Lazily enumerates every point of a finite domain in lexicographic order.
class DomainRange {
 public:
  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FeatureVector;
    using difference_type = std::ptrdiff_t;
    using pointer = const FeatureVector*;
    using reference = const FeatureVector&;

    Iterator() = default;
    Iterator(const Domains* domains, bool at_end);
    const FeatureVector& operator*() const { return point_; }
    const FeatureVector* operator->() const { return &point_; }
    Iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const Iterator& o) const { return done_ == o.done_ && (done_ || point_ == o.point_); }

   private:
    const Domains* domains_ = nullptr;
    std::vector<int> index_;
    FeatureVector point_;
    bool done_ = true;
  };

  // Throws kDomainTooLarge when the domain has more than `cap` points.
  explicit DomainRange(const Domains& domains, std::uint64_t cap = kDefaultDomainCap);

  Iterator begin() const { return Iterator(&domains_, false); }
  Iterator end() const { return Iterator(&domains_, true); }
  std::uint64_t size() const { return size_; }

 private:
  Domains domains_;
  std::uint64_t size_;
};

inline DomainRange EnumerateDomain(const Classifier& model, std::uint64_t cap = kDefaultDomainCap) {
  return DomainRange(model.domains(), cap);
}

}  // namespace probex

#endif  // PROBEX_MODEL_H_
