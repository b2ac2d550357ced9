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

#ifndef PROBEX_GENERATORS_H_
#define PROBEX_GENERATORS_H_

#include <cstdint>
#include <random>

#include "probex/distribution.h"
#include "probex/feature_set.h"
#include "probex/model.h"

namespace probex {

// Seeded instance generators. Identical seeds yield identical instances.
using Rng = std::mt19937_64;

int UniformInt(Rng& rng, int lo, int hi);  // inclusive

// Feature f gets 2..max_size consecutive values starting at 0.
Domains RandomDomains(Rng& rng, int n, int max_size);

// Splits only on features in `allowed` (every feature when empty).
DecisionTree RandomTree(Rng& rng, const Domains& domains, int max_depth, int num_classes,
                        FeatureSet allowed = {});
Model RandomTreeModel(Rng& rng, const Domains& domains, int max_depth, int num_classes = 2,
                      FeatureSet allowed = {});
Model RandomEnsembleModel(Rng& rng, const Domains& domains, int trees, int max_depth, int num_classes = 2);
Model RandomTruthTableModel(Rng& rng, const Domains& domains, int num_classes = 2);
// Terms are the positive leaves of a random binary tree, hence orthogonal.
Model RandomOdnfModel(Rng& rng, int n, int max_depth);
Model RandomMlpModel(Rng& rng, int n, int hidden);

// Marginal masses are multiples of 1/denominator; every value keeps positive mass.
ProductDistribution RandomProduct(Rng& rng, const Domains& domains, int denominator = 12);

// Rows drawn independently and uniformly from the domain, duplicates kept.
EmpiricalDistribution RandomDataset(Rng& rng, const Domains& domains, int rows);

// Features taking more than one value in the dataset.
FeatureSet VaryingFeatures(const EmpiricalDistribution& dataset);

// Full Cartesian grid over random per-feature supports, capped at `max_rows`
// points; its frequency distribution is a product distribution.
EmpiricalDistribution ProductGridDataset(Rng& rng, const Domains& domains, int max_rows);

}  // namespace probex

#endif  // PROBEX_GENERATORS_H_
