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

#ifndef PROBEX_AUDIT_H_
#define PROBEX_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "probex/feature_set.h"
#include "probex/rational.h"
#include "probex/value_function.h"

namespace probex {

inline constexpr int kMonotoneAuditCap = 12;
inline constexpr int kModularityAuditCap = 10;

enum class Property { kMonotone, kSubmodular, kSupermodular };
std::string PropertyName(Property property);

struct AuditMode {
  bool exhaustive = true;
  int samples = 0;
  std::uint64_t seed = 0;

  static AuditMode Exhaustive() { return {}; }
  static AuditMode Sampled(int samples, std::uint64_t seed) { return {false, samples, seed}; }
};

// Monotone: S' = S + i, values = [v(S), v(S')].
// Modularity: S subset of S', i outside S',
//   values = [v(S), v(S + i), v(S'), v(S' + i)].
struct Witness {
  FeatureSet s;
  FeatureSet s_prime;
  int i = -1;
  std::vector<Rational> values;

  bool operator==(const Witness&) const = default;
};

struct AuditReport {
  Property property = Property::kMonotone;
  AuditMode mode;
  int num_features = 0;
  bool holds = true;
  // Sorted by (|S|, S, S', i); duplicates removed.
  std::vector<Witness> witnesses;
  // Tuples examined (exhaustive) or drawn (sampled).
  std::uint64_t tuples = 0;
};

// v(S + i) - v(S). Throws kInvalidInput when i is in S.
Rational MarginalGain(const SetFunction& v, FeatureSet s, int i);

// Exhaustive mode throws kCapExceeded above the per-property cap.
AuditReport CheckMonotone(const SetFunction& v, AuditMode mode = {}, int jobs = 1);
AuditReport CheckSubmodular(const SetFunction& v, AuditMode mode = {}, int jobs = 1);
AuditReport CheckSupermodular(const SetFunction& v, AuditMode mode = {}, int jobs = 1);
AuditReport CheckProperty(Property property, const SetFunction& v, AuditMode mode = {}, int jobs = 1);

// Recomputes the witness values from v and confirms they still violate.
bool Revalidates(Property property, const SetFunction& v, const Witness& w);

}  // namespace probex

#endif  // PROBEX_AUDIT_H_
