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

#ifndef PROBEX_DISTRIBUTION_H_
#define PROBEX_DISTRIBUTION_H_

#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "probex/feature_set.h"
#include "probex/model.h"
#include "probex/rational.h"

namespace probex {

// Frequency distribution over a finite dataset. Duplicate rows are kept and
// weight the point mass.
class EmpiricalDistribution {
 public:
  // Throws kInvalidInput citing the first offending row index.
  EmpiricalDistribution(std::vector<FeatureVector> rows, Domains domains);

  const Domains& domains() const { return domains_; }
  int num_features() const { return domains_.num_features(); }
  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<FeatureVector>& rows() const { return rows_; }
  const FeatureVector& row(int i) const { return rows_[i]; }

  // multiplicity(x) / |D|
  Rational PointMass(std::span<const int> x) const;
  int Multiplicity(std::span<const int> x) const;

  // Indices of rows agreeing with `x` on every coordinate of `s`, ascending.
  std::vector<int> MatchingRows(std::span<const int> x, FeatureSet s) const;

 private:
  std::vector<FeatureVector> rows_;
  Domains domains_;
  std::map<FeatureVector, int> counts_;
};

// Independent features: Pr(x) = prod_i p_i(x_i).
class ProductDistribution {
 public:
  // marginals[f][k] is the mass of domains.values(f)[k]. Each marginal must be
  // non-negative and sum to exactly one.
  ProductDistribution(Domains domains, std::vector<std::vector<Rational>> marginals);
  static ProductDistribution Uniform(const Domains& domains);

  const Domains& domains() const { return domains_; }
  int num_features() const { return domains_.num_features(); }
  const std::vector<Rational>& marginal(int feature) const { return marginals_[feature]; }
  const Rational& Mass(int feature, int value) const;

  Rational PointMass(std::span<const int> x) const;

  // Total marginal mass of `allowed` (a subset of the feature's domain).
  Rational ConstraintMass(int feature, std::span<const int> allowed) const;
  // Mass of a single leaf/term constraint: 1 when free, else the pinned value.
  Rational ConstraintMass(int feature, std::optional<int> pinned) const;

 private:
  Domains domains_;
  std::vector<std::vector<Rational>> marginals_;
};

class Distribution {
 public:
  using Body = std::variant<EmpiricalDistribution, ProductDistribution>;

  Distribution(EmpiricalDistribution d) : body_(std::move(d)) {}  // NOLINT
  Distribution(ProductDistribution d) : body_(std::move(d)) {}    // NOLINT

  const Domains& domains() const;
  int num_features() const { return domains().num_features(); }
  Rational PointMass(std::span<const int> x) const;

  const EmpiricalDistribution* empirical() const { return std::get_if<EmpiricalDistribution>(&body_); }
  const ProductDistribution* product() const { return std::get_if<ProductDistribution>(&body_); }

 private:
  Body body_;
};

}  // namespace probex

#endif  // PROBEX_DISTRIBUTION_H_
