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

#ifndef PROBEX_FEATURE_SET_H_
#define PROBEX_FEATURE_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace probex {

inline constexpr int kMaxFeatures = 64;

// A subset of the feature indices {0, ..., n-1}, stored as a bitmask.
class FeatureSet {
 public:
  using Mask = std::uint64_t;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr FeatureSet() = default;
  FeatureSet(std::initializer_list<int> indices);
  explicit FeatureSet(const std::vector<int>& indices);

  static constexpr FeatureSet FromMask(Mask mask) {
    FeatureSet s;
    s.mask_ = mask;
    return s;
  }
  static constexpr FeatureSet Full(int n) {
    return FromMask(n >= kMaxFeatures ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }

  constexpr FeatureSet with(int i) const { return FromMask(mask_ | (Mask{1} << i)); }
  constexpr FeatureSet without(int i) const { return FromMask(mask_ & ~(Mask{1} << i)); }
  constexpr FeatureSet complement(int n) const { return FromMask(~mask_ & Full(n).mask_); }
  constexpr bool is_subset_of(FeatureSet other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr FeatureSet operator|(FeatureSet o) const { return FromMask(mask_ | o.mask_); }
  constexpr FeatureSet operator&(FeatureSet o) const { return FromMask(mask_ & o.mask_); }
  constexpr FeatureSet operator-(FeatureSet o) const { return FromMask(mask_ & ~o.mask_); }

  constexpr Iterator begin() const { return Iterator(mask_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> indices() const;
  // "{0,2,5}"
  std::string ToString() const;

  constexpr bool operator==(const FeatureSet&) const = default;

 private:
  Mask mask_ = 0;
};

// Lexicographic order on the sorted index lists: {} < {0} < {0,1} < {1}.
bool LexLess(FeatureSet a, FeatureSet b);

// Order by (size, lexicographic), the canonical enumeration order.
bool SizeLexLess(FeatureSet a, FeatureSet b);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<FeatureSet> Combinations(int n, int k);

}  // namespace probex

#endif  // PROBEX_FEATURE_SET_H_
