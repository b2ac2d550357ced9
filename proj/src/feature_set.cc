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

#include "probex/feature_set.h"

#include <algorithm>

#include "probex/errors.h"

namespace probex {

namespace {

void CheckIndex(int i) {
  if (i < 0 || i >= kMaxFeatures) {
    throw Error(ErrorCode::kInvalidInput, "feature index " + std::to_string(i) + " out of range");
  }
}

}  // namespace

FeatureSet::FeatureSet(std::initializer_list<int> indices) {
  for (int i : indices) {
    CheckIndex(i);
    mask_ |= Mask{1} << i;
  }
}

FeatureSet::FeatureSet(const std::vector<int>& indices) {
  for (int i : indices) {
    CheckIndex(i);
    mask_ |= Mask{1} << i;
  }
}

std::vector<int> FeatureSet::indices() const { return {begin(), end()}; }

std::string FeatureSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int i : *this) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool LexLess(FeatureSet a, FeatureSet b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

bool SizeLexLess(FeatureSet a, FeatureSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return LexLess(a, b);
}

std::vector<FeatureSet> Combinations(int n, int k) {
  std::vector<FeatureSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(FeatureSet(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace probex
