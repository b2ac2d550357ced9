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

#include "probex/model_view.h"

#include "probex/errors.h"

namespace probex {

MaskedModel::MaskedModel(std::shared_ptr<const Classifier> base, FeatureSet removed,
                         FeatureVector reference)
    : base_(std::move(base)), removed_(removed), reference_(std::move(reference)) {
  const int n = base_->num_features();
  if (!removed_.is_subset_of(FeatureSet::Full(n))) {
    throw Error(ErrorCode::kInvalidInput, "removed set " + removed_.ToString() + " exceeds n");
  }
  base_->domains().Validate(reference_);
  std::vector<std::vector<int>> values;
  for (int f = 0; f < n; ++f) {
    if (removed_.contains(f)) continue;
    original_index_.push_back(f);
    values.push_back(base_->domains().values(f));
  }
  domains_ = Domains(std::move(values));
}

ClassLabel MaskedModel::PredictUnchecked(std::span<const int> x) const {
  FeatureVector full = reference_;
  for (std::size_t k = 0; k < original_index_.size(); ++k) full[original_index_[k]] = x[k];
  return base_->PredictUnchecked(full);
}

FeatureSet MaskedModel::ToOriginal(FeatureSet reduced) const {
  FeatureSet out;
  for (int k : reduced) out = out.with(original_index_.at(k));
  return out;
}

FeatureVector MaskedModel::Project(std::span<const int> full) const {
  FeatureVector out;
  out.reserve(original_index_.size());
  for (int f : original_index_) out.push_back(full[f]);
  return out;
}

std::shared_ptr<const MaskedModel> MaskFeatures(std::shared_ptr<const Classifier> model,
                                                FeatureSet removed, FeatureVector reference) {
  return std::make_shared<const MaskedModel>(std::move(model), removed, std::move(reference));
}

}  // namespace probex
