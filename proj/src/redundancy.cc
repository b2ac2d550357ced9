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

#include "probex/errors.h"
#include "probex/explain.h"

namespace probex {

RedundancySplit RemoveRedundantFeatures(const Classifier& model, const EmpiricalDistribution& dataset) {
  const int n = model.num_features();
  std::vector<ClassLabel> predictions;
  for (const auto& row : dataset.rows()) predictions.push_back(model.PredictUnchecked(row));
  RedundancySplit split;
  FeatureVector hybrid;
  for (int i = 0; i < n; ++i) {
    bool redundant = true;
    for (int x = 0; x < dataset.size() && redundant; ++x) {
      hybrid = dataset.row(x);
      for (int z = 0; z < dataset.size(); ++z) {
        hybrid[i] = dataset.row(z)[i];
        if (model.PredictUnchecked(hybrid) != predictions[x]) {
          redundant = false;
          break;
        }
      }
    }
    if (redundant) {
      split.removed = split.removed.with(i);
    } else {
      split.surviving = split.surviving.with(i);
    }
  }
  return split;
}

ReducedInstance Preprocess(std::shared_ptr<const Classifier> model, const EmpiricalDistribution& dataset) {
  if (!(model->domains() == dataset.domains())) {
    throw Error(ErrorCode::kInvalidInput, "model and dataset declare different domains");
  }
  ReducedInstance out;
  out.split = RemoveRedundantFeatures(*model, dataset);
  out.model = MaskFeatures(std::move(model), out.split.removed, dataset.row(0));
  std::vector<FeatureVector> rows;
  for (const auto& row : dataset.rows()) rows.push_back(out.model->Project(row));
  out.distribution =
      std::make_shared<const Distribution>(EmpiricalDistribution(std::move(rows), out.model->domains()));
  return out;
}

}  // namespace probex
