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

#include "probex/distribution.h"

#include "probex/errors.h"

namespace probex {

EmpiricalDistribution::EmpiricalDistribution(std::vector<FeatureVector> rows, Domains domains)
    : rows_(std::move(rows)), domains_(std::move(domains)) {
  if (rows_.empty()) throw Error(ErrorCode::kInvalidInput, "dataset has no rows");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    try {
      domains_.Validate(rows_[r]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidInput, "dataset row " + std::to_string(r) + ": " + e.what());
    }
    ++counts_[rows_[r]];
  }
}

int EmpiricalDistribution::Multiplicity(std::span<const int> x) const {
  const auto it = counts_.find(FeatureVector(x.begin(), x.end()));
  return it == counts_.end() ? 0 : it->second;
}

Rational EmpiricalDistribution::PointMass(std::span<const int> x) const {
  return Rational(Multiplicity(x), size());
}

std::vector<int> EmpiricalDistribution::MatchingRows(std::span<const int> x, FeatureSet s) const {
  std::vector<int> out;
  for (int r = 0; r < size(); ++r) {
    bool match = true;
    for (int f : s) {
      if (rows_[r][f] != x[f]) {
        match = false;
        break;
      }
    }
    if (match) out.push_back(r);
  }
  return out;
}

ProductDistribution::ProductDistribution(Domains domains, std::vector<std::vector<Rational>> marginals)
    : domains_(std::move(domains)), marginals_(std::move(marginals)) {
  if (static_cast<int>(marginals_.size()) != domains_.num_features()) {
    throw Error(ErrorCode::kInvalidInput, "need one marginal per feature");
  }
  for (int f = 0; f < domains_.num_features(); ++f) {
    if (static_cast<int>(marginals_[f].size()) != domains_.size(f)) {
      throw Error(ErrorCode::kInvalidInput, "marginal " + std::to_string(f) + " does not cover its domain");
    }
    Rational total = 0;
    for (const Rational& p : marginals_[f]) {
      if (p < 0) throw Error(ErrorCode::kInvalidInput, "negative mass in marginal " + std::to_string(f));
      total += p;
    }
    if (total != 1) {
      throw Error(ErrorCode::kInvalidInput,
                  "marginal " + std::to_string(f) + " sums to " + ToString(total) + ", not 1");
    }
  }
}

ProductDistribution ProductDistribution::Uniform(const Domains& domains) {
  std::vector<std::vector<Rational>> marginals;
  for (int f = 0; f < domains.num_features(); ++f) {
    marginals.emplace_back(domains.size(f), Rational(1, domains.size(f)));
  }
  return ProductDistribution(domains, std::move(marginals));
}

const Rational& ProductDistribution::Mass(int feature, int value) const {
  const int k = domains_.IndexOf(feature, value);
  if (k < 0) {
    throw Error(ErrorCode::kInvalidInput, "value " + std::to_string(value) +
                                              " outside domain of feature " + std::to_string(feature));
  }
  return marginals_[feature][k];
}

Rational ProductDistribution::PointMass(std::span<const int> x) const {
  domains_.Validate(x);
  Rational mass = 1;
  for (int f = 0; f < num_features(); ++f) mass *= Mass(f, x[f]);
  return mass;
}

Rational ProductDistribution::ConstraintMass(int feature, std::span<const int> allowed) const {
  Rational mass = 0;
  for (int v : allowed) mass += Mass(feature, v);
  return mass;
}

Rational ProductDistribution::ConstraintMass(int feature, std::optional<int> pinned) const {
  return pinned ? Mass(feature, *pinned) : Rational(1);
}

const Domains& Distribution::domains() const {
  return std::visit([](const auto& d) -> const Domains& { return d.domains(); }, body_);
}

Rational Distribution::PointMass(std::span<const int> x) const {
  return std::visit([&](const auto& d) { return d.PointMass(x); }, body_);
}

}  // namespace probex
