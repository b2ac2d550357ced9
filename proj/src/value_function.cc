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

#include "probex/value_function.h"

#include "probex/errors.h"

namespace probex {

std::string ModeName(Mode m) {
  switch (m) {
    case Mode::kLocalSufficient: return "local-sufficient";
    case Mode::kLocalContrastive: return "local-contrastive";
    case Mode::kGlobalSufficient: return "global-sufficient";
    case Mode::kGlobalContrastive: return "global-contrastive";
  }
  return "unknown";
}

std::string BackendName(Backend b) {
  switch (b) {
    case Backend::kAuto: return "auto";
    case Backend::kBruteForce: return "brute-force";
    case Backend::kEmpirical: return "empirical";
    case Backend::kLeafPairs: return "leaf-pairs";
    case Backend::kTermPairs: return "term-pairs";
  }
  return "unknown";
}

TabulatedSetFunction::TabulatedSetFunction(int n, std::vector<Rational> values, bool monotone)
    : n_(n), values_(std::move(values)), monotone_(monotone) {
  if (n < 0 || n > 24 || values_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidInput, "table needs exactly 2^n entries");
  }
}

TabulatedSetFunction TabulatedSetFunction::FromFunction(
    int n, const std::function<Rational(FeatureSet)>& fn, bool monotone) {
  std::vector<Rational> values(std::size_t{1} << n);
  for (std::size_t m = 0; m < values.size(); ++m) values[m] = fn(FeatureSet::FromMask(m));
  return TabulatedSetFunction(n, std::move(values), monotone);
}

namespace {

struct Tally {
  Rational agree = 0;
  Rational total = 0;
};

// Mass of points z with z_C = x_C, split by whether f(z) = f(x).
Tally ConditionalTally(const Classifier& model, const Distribution& dist, std::span<const int> x,
                       FeatureSet conditioned, const EvalOptions& options) {
  const ClassLabel target = model.PredictUnchecked(x);
  const int n = model.num_features();
  Tally tally;
  if (const auto* data = dist.empirical()) {
    for (int r : data->MatchingRows(x, conditioned)) {
      tally.total += 1;
      if (model.PredictUnchecked(data->row(r)) == target) tally.agree += 1;
    }
    return tally;
  }
  const ProductDistribution& product = *dist.product();
  const Domains& domains = model.domains();
  Rational support = 1;
  for (int f : conditioned) support *= product.Mass(f, x[f]);
  if (support == 0) return tally;

  // Odometer over the free coordinates; conditioned ones stay at x.
  const std::vector<int> free = conditioned.complement(n).indices();
  std::uint64_t points = 1;
  for (int f : free) {
    points *= static_cast<std::uint64_t>(domains.size(f));
    if (points > options.domain_cap) {
      throw Error(ErrorCode::kDomainTooLarge, "free sub-domain exceeds cap");
    }
  }
  FeatureVector z(x.begin(), x.end());
  std::vector<int> index(free.size(), 0);
  for (int f : free) z[f] = domains.values(f)[0];
  while (true) {
    Rational mass = 1;
    for (int f : free) mass *= product.Mass(f, z[f]);
    if (mass != 0) {
      tally.total += mass;
      if (model.PredictUnchecked(z) == target) tally.agree += mass;
    }
    int k = static_cast<int>(free.size()) - 1;
    for (; k >= 0; --k) {
      const int f = free[k];
      if (++index[k] < domains.size(f)) {
        z[f] = domains.values(f)[index[k]];
        break;
      }
      index[k] = 0;
      z[f] = domains.values(f)[0];
    }
    if (k < 0) break;
  }
  tally.total *= support;
  tally.agree *= support;
  return tally;
}

// (1/|D|) |{z in D : f(x_fixed; z_rest) = f(x)}|
Rational BaselineAgreement(const Classifier& model, const EmpiricalDistribution& data,
                           std::span<const int> x, FeatureSet fixed) {
  const ClassLabel target = model.PredictUnchecked(x);
  int agree = 0;
  FeatureVector hybrid(x.size());
  for (const FeatureVector& z : data.rows()) {
    for (std::size_t f = 0; f < x.size(); ++f) {
      hybrid[f] = fixed.contains(static_cast<int>(f)) ? x[f] : z[f];
    }
    if (model.PredictUnchecked(hybrid) == target) ++agree;
  }
  return Rational(agree, data.size());
}

void CheckCompatible(const Classifier& model, const Distribution& dist) {
  if (!(model.domains() == dist.domains())) {
    throw Error(ErrorCode::kInvalidInput, "model and distribution declare different domains");
  }
}

const EmpiricalDistribution& RequireBaselineData(const Distribution& dist) {
  const auto* data = dist.empirical();
  if (data == nullptr) {
    throw Error(ErrorCode::kInvalidInput, "baseline semantics requires an empirical distribution");
  }
  return *data;
}

}  // namespace

Rational LocalSufficientValue(const Classifier& model, const Distribution& dist,
                              std::span<const int> x, FeatureSet s, Semantics semantics,
                              const EvalOptions& options) {
  CheckCompatible(model, dist);
  model.domains().Validate(x);
  if (semantics == Semantics::kBaseline) {
    return BaselineAgreement(model, RequireBaselineData(dist), x, s);
  }
  const Tally t = ConditionalTally(model, dist, x, s, options);
  if (t.total == 0) {
    throw Error(ErrorCode::kUndefinedConditional,
                "Pr(z_S = x_S) = 0 for S = " + s.ToString());
  }
  return t.agree / t.total;
}

Rational LocalContrastiveValue(const Classifier& model, const Distribution& dist,
                               std::span<const int> x, FeatureSet s, Semantics semantics,
                               const EvalOptions& options) {
  CheckCompatible(model, dist);
  model.domains().Validate(x);
  const FeatureSet held = s.complement(model.num_features());
  if (semantics == Semantics::kBaseline) {
    return 1 - BaselineAgreement(model, RequireBaselineData(dist), x, held);
  }
  const Tally t = ConditionalTally(model, dist, x, held, options);
  if (t.total == 0) {
    throw Error(ErrorCode::kUndefinedConditional,
                "Pr(z_~S = x_~S) = 0 for S = " + s.ToString());
  }
  return (t.total - t.agree) / t.total;
}

Backend SelectBackend(const Classifier& model, const Distribution& dist) {
  if (dist.empirical()) return Backend::kEmpirical;
  if (const auto* m = dynamic_cast<const Model*>(&model)) {
    if (m->get_if<DecisionTree>()) return Backend::kLeafPairs;
    if (m->get_if<OrthogonalDnf>()) return Backend::kTermPairs;
  }
  return Backend::kBruteForce;
}

Rational GlobalSufficientValue(const Classifier& model, const Distribution& dist, FeatureSet s,
                               const EvalOptions& options) {
  CheckCompatible(model, dist);
  const Backend backend =
      options.backend == Backend::kAuto ? SelectBackend(model, dist) : options.backend;
  switch (backend) {
    case Backend::kEmpirical:
      if (!dist.empirical()) {
        throw Error(ErrorCode::kBackendMismatch, "empirical backend needs an empirical distribution");
      }
      return EvalGlobalSuffEmpirical(model, *dist.empirical(), s, options.jobs);
    case Backend::kLeafPairs:
      return EvalGlobalSuffLeafPairs(model, dist, s);
    case Backend::kTermPairs:
      return EvalGlobalSuffTermPairs(model, dist, s);
    case Backend::kBruteForce:
    case Backend::kAuto:
      break;
  }
  return EvalGlobalSuffBruteForce(model, dist, s, options.domain_cap);
}

Rational GlobalContrastiveValue(const Classifier& model, const Distribution& dist, FeatureSet s,
                                const EvalOptions& options) {
  return 1 - GlobalSufficientValue(model, dist, s.complement(model.num_features()), options);
}

// ---------------------------------------------------------- ValueFunction

ValueFunction::ValueFunction(Mode mode, std::shared_ptr<const Classifier> model,
                             std::shared_ptr<const Distribution> dist,
                             std::optional<FeatureVector> instance, Semantics semantics,
                             EvalOptions options)
    : mode_(mode),
      model_(std::move(model)),
      dist_(std::move(dist)),
      instance_(std::move(instance)),
      semantics_(semantics),
      options_(options) {
  CheckCompatible(*model_, *dist_);
  if (IsLocal(mode_)) {
    if (!instance_) throw Error(ErrorCode::kInvalidInput, "local modes require an instance");
    model_->domains().Validate(*instance_);
    if (semantics_ == Semantics::kBaseline) RequireBaselineData(*dist_);
  } else {
    if (instance_) throw Error(ErrorCode::kInvalidInput, "global modes take no instance");
    if (semantics_ == Semantics::kBaseline) {
      throw Error(ErrorCode::kInvalidInput, "baseline semantics applies to local modes only");
    }
    const Backend backend =
        options_.backend == Backend::kAuto ? SelectBackend(*model_, *dist_) : options_.backend;
    if (backend == Backend::kEmpirical && dist_->empirical()) {
      for (const auto& row : dist_->empirical()->rows()) {
        row_predictions_.push_back(model_->PredictUnchecked(row));
      }
    }
  }
}

Rational ValueFunction::Compute(FeatureSet s) const {
  const int n = num_features();
  switch (mode_) {
    case Mode::kLocalSufficient:
      return LocalSufficientValue(*model_, *dist_, *instance_, s, semantics_, options_);
    case Mode::kLocalContrastive:
      return LocalContrastiveValue(*model_, *dist_, *instance_, s, semantics_, options_);
    case Mode::kGlobalSufficient:
    case Mode::kGlobalContrastive:
      break;
  }
  const FeatureSet conditioned = mode_ == Mode::kGlobalSufficient ? s : s.complement(n);
  Rational suff;
  if (!row_predictions_.empty()) {
    suff = EvalGlobalSuffEmpirical(*model_, *dist_->empirical(), conditioned, options_.jobs,
                                   row_predictions_);
  } else {
    suff = GlobalSufficientValue(*model_, *dist_, conditioned, options_);
  }
  return mode_ == Mode::kGlobalSufficient ? suff : 1 - suff;
}

Rational ValueFunction::Evaluate(FeatureSet s) const {
  if (!s.is_subset_of(FeatureSet::Full(num_features()))) {
    throw Error(ErrorCode::kInvalidInput, "subset " + s.ToString() + " exceeds n");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    const auto it = cache_.find(s.mask());
    if (it != cache_.end()) return it->second;
  }
  Rational value = Compute(s);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(s.mask(), value);
  return value;
}

std::size_t ValueFunction::cache_size() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.size();
}

}  // namespace probex
