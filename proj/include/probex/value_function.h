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

#ifndef PROBEX_VALUE_FUNCTION_H_
#define PROBEX_VALUE_FUNCTION_H_

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "probex/distribution.h"
#include "probex/feature_set.h"
#include "probex/model.h"
#include "probex/rational.h"

namespace probex {

enum class Mode { kLocalSufficient, kLocalContrastive, kGlobalSufficient, kGlobalContrastive };

// How a local value treats an empirical dataset. kConditional conditions on
// rows agreeing with x; kBaseline substitutes each row into the free
// coordinates of x (x_S; z_{~S}).
enum class Semantics { kConditional, kBaseline };

enum class Backend { kAuto, kBruteForce, kEmpirical, kLeafPairs, kTermPairs };

inline bool IsLocal(Mode m) { return m == Mode::kLocalSufficient || m == Mode::kLocalContrastive; }
inline bool IsSufficient(Mode m) { return m == Mode::kLocalSufficient || m == Mode::kGlobalSufficient; }
std::string ModeName(Mode m);
std::string BackendName(Backend b);

// Any set function v: 2^[n] -> Q. Algorithms and audits only see this.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int num_features() const = 0;
  virtual Rational Evaluate(FeatureSet s) const = 0;
  Rational operator()(FeatureSet s) const { return Evaluate(s); }
  // True when v is monotone non-decreasing by construction.
  virtual bool known_monotone() const { return false; }
};

// Explicit table indexed by mask, for synthetic functions in tests and tools.
class TabulatedSetFunction final : public SetFunction {
 public:
  TabulatedSetFunction(int n, std::vector<Rational> values, bool monotone = false);
  static TabulatedSetFunction FromFunction(int n, const std::function<Rational(FeatureSet)>& fn,
                                           bool monotone = false);
  int num_features() const override { return n_; }
  Rational Evaluate(FeatureSet s) const override { return values_.at(s.mask()); }
  bool known_monotone() const override { return monotone_; }

 private:
  int n_;
  std::vector<Rational> values_;
  bool monotone_;
};

struct EvalOptions {
  Backend backend = Backend::kAuto;
  int jobs = 1;
  std::uint64_t domain_cap = kDefaultDomainCap;
};

// Pr_{z~D}(f(z) = f(x) | z_S = x_S), or the baseline substitution frequency.
Rational LocalSufficientValue(const Classifier& model, const Distribution& dist,
                              std::span<const int> x, FeatureSet s,
                              Semantics semantics = Semantics::kConditional,
                              const EvalOptions& options = {});

// Pr_{z~D}(f(z) != f(x) | z_{~S} = x_{~S}), S being the features free to vary.
Rational LocalContrastiveValue(const Classifier& model, const Distribution& dist,
                               std::span<const int> x, FeatureSet s,
                               Semantics semantics = Semantics::kConditional,
                               const EvalOptions& options = {});

// E_{x~D}[Pr_{z~D}(f(z) = f(x) | z_S = x_S)], dispatched to a backend.
Rational GlobalSufficientValue(const Classifier& model, const Distribution& dist, FeatureSet s,
                               const EvalOptions& options = {});

// 1 - v_global_suff(~S).
Rational GlobalContrastiveValue(const Classifier& model, const Distribution& dist, FeatureSet s,
                                const EvalOptions& options = {});

Backend SelectBackend(const Classifier& model, const Distribution& dist);

// Pairwise scan over the dataset. `row_predictions` may be empty, in which
// case the rows are classified on the fly.
Rational EvalGlobalSuffEmpirical(const Classifier& model, const EmpiricalDistribution& dataset,
                                 FeatureSet s, int jobs = 1,
                                 std::span<const ClassLabel> row_predictions = {});

// Ordered same-class leaf pairs of a decision tree under a product distribution.
Rational EvalGlobalSuffLeafPairs(const Classifier& model, const Distribution& dist, FeatureSet s);

// Consistent term pairs of an orthogonal DNF under a product distribution.
Rational EvalGlobalSuffTermPairs(const Classifier& model, const Distribution& dist, FeatureSet s);

// Groups every domain point by its projection on S; works for any distribution.
Rational EvalGlobalSuffBruteForce(const Classifier& model, const Distribution& dist, FeatureSet s,
                                  std::uint64_t domain_cap = kDefaultDomainCap);

// Sum over ordered pairs of equally-labelled constraint maps of
// prod_{i in S} mass(C1_i & C2_i) * prod_{i not in S} mass(C1_i) mass(C2_i).
Rational SameLabelPairMass(std::span<const Leaf> items, const ProductDistribution& dist, FeatureSet s);

// Memoised value function in one of the four modes.
class ValueFunction final : public SetFunction {
 public:
  ValueFunction(Mode mode, std::shared_ptr<const Classifier> model,
                std::shared_ptr<const Distribution> dist,
                std::optional<FeatureVector> instance = std::nullopt,
                Semantics semantics = Semantics::kConditional, EvalOptions options = {});

  int num_features() const override { return model_->num_features(); }
  Rational Evaluate(FeatureSet s) const override;
  bool known_monotone() const override { return !IsLocal(mode_); }

  Mode mode() const { return mode_; }
  Semantics semantics() const { return semantics_; }
  const Classifier& model() const { return *model_; }
  const Distribution& distribution() const { return *dist_; }
  const std::shared_ptr<const Classifier>& model_ptr() const { return model_; }
  const std::shared_ptr<const Distribution>& distribution_ptr() const { return dist_; }
  const std::optional<FeatureVector>& instance() const { return instance_; }
  const EvalOptions& options() const { return options_; }
  std::size_t cache_size() const;

 private:
  Rational Compute(FeatureSet s) const;

  Mode mode_;
  std::shared_ptr<const Classifier> model_;
  std::shared_ptr<const Distribution> dist_;
  std::optional<FeatureVector> instance_;
  Semantics semantics_;
  EvalOptions options_;
  std::vector<ClassLabel> row_predictions_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<FeatureSet::Mask, Rational> cache_;
};

}  // namespace probex

#endif  // PROBEX_VALUE_FUNCTION_H_
