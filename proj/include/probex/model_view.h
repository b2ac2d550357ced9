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

#ifndef PROBEX_MODEL_VIEW_H_
#define PROBEX_MODEL_VIEW_H_

#include <memory>

#include "probex/feature_set.h"
#include "probex/model.h"

namespace probex {

// A classifier over the surviving features of `base`. Removed features are
// pinned to their values in `reference`; no structural surgery is done, so
// this works for every model family.
class MaskedModel final : public Classifier {
 public:
  MaskedModel(std::shared_ptr<const Classifier> base, FeatureSet removed, FeatureVector reference);

  const Domains& domains() const override { return domains_; }
  int num_classes() const override { return base_->num_classes(); }
  ClassLabel PredictUnchecked(std::span<const int> x) const override;

  const Classifier& base() const { return *base_; }
  FeatureSet removed() const { return removed_; }
  FeatureSet surviving() const { return removed_.complement(base_->num_features()); }
  // Original index of each reduced coordinate.
  const std::vector<int>& original_index() const { return original_index_; }
  // Maps a subset of reduced coordinates back to original feature indices.
  FeatureSet ToOriginal(FeatureSet reduced) const;
  // Projects a full-length row onto the surviving coordinates.
  FeatureVector Project(std::span<const int> full) const;

 private:
  std::shared_ptr<const Classifier> base_;
  FeatureSet removed_;
  FeatureVector reference_;
  std::vector<int> original_index_;
  Domains domains_;
};

std::shared_ptr<const MaskedModel> MaskFeatures(std::shared_ptr<const Classifier> model,
                                                FeatureSet removed, FeatureVector reference);

}  // namespace probex

#endif  // PROBEX_MODEL_VIEW_H_
