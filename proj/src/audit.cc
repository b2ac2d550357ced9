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

#include "probex/audit.h"

#include <algorithm>
#include <mutex>
#include <optional>
#include <random>

#include "probex/errors.h"
#include "probex/parallel.h"

namespace probex {

std::string PropertyName(Property property) {
  switch (property) {
    case Property::kMonotone: return "monotone";
    case Property::kSubmodular: return "submodular";
    case Property::kSupermodular: return "supermodular";
  }
  return "unknown";
}

Rational MarginalGain(const SetFunction& v, FeatureSet s, int i) {
  if (i < 0 || i >= v.num_features()) {
    throw Error(ErrorCode::kInvalidInput, "feature " + std::to_string(i) + " out of range");
  }
  if (s.contains(i)) {
    throw Error(ErrorCode::kInvalidInput, "feature " + std::to_string(i) + " already in " + s.ToString());
  }
  return v(s.with(i)) - v(s);
}

namespace {

bool WitnessLess(const Witness& a, const Witness& b) {
  if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
  if (a.s != b.s) return LexLess(a.s, b.s);
  if (a.s_prime != b.s_prime) return LexLess(a.s_prime, b.s_prime);
  return a.i < b.i;
}

bool Violates(Property property, const std::vector<Rational>& values) {
  switch (property) {
    case Property::kMonotone: return values[1] < values[0];
    case Property::kSubmodular: return values[1] - values[0] < values[3] - values[2];
    case Property::kSupermodular: return values[1] - values[0] > values[3] - values[2];
  }
  return false;
}

// Value lookup: a precomputed table when exhaustive, direct calls otherwise.
class Values {
 public:
  Values(const SetFunction& v, bool tabulate, int jobs) : v_(v) {
    if (!tabulate) return;
    const std::size_t count = std::size_t{1} << v.num_features();
    table_.resize(count);
    ParallelFor(count, jobs, [&](std::size_t m) { table_[m] = v(FeatureSet::FromMask(m)); });
  }
  Rational operator()(FeatureSet s) const { return table_.empty() ? v_(s) : table_[s.mask()]; }

 private:
  const SetFunction& v_;
  std::vector<Rational> table_;
};

std::optional<Witness> Probe(Property property, const Values& values, FeatureSet s, FeatureSet s_prime,
                             int i) {
  Witness w{s, s_prime, i, {}};
  if (property == Property::kMonotone) {
    w.values = {values(s), values(s_prime)};
  } else {
    w.values = {values(s), values(s.with(i)), values(s_prime), values(s_prime.with(i))};
  }
  if (!Violates(property, w.values)) return std::nullopt;
  return w;
}

void Normalize(AuditReport& report) {
  std::sort(report.witnesses.begin(), report.witnesses.end(), WitnessLess);
  report.witnesses.erase(std::unique(report.witnesses.begin(), report.witnesses.end()),
                         report.witnesses.end());
  report.holds = report.witnesses.empty();
}

AuditReport Exhaustive(Property property, const SetFunction& v, int jobs) {
  const int n = v.num_features();
  const int cap = property == Property::kMonotone ? kMonotoneAuditCap : kModularityAuditCap;
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, "exhaustive " + PropertyName(property) + " audit over n = " +
                                             std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  const Values values(v, true, jobs);
  const std::size_t count = std::size_t{1} << n;
  const FeatureSet::Mask full = FeatureSet::Full(n).mask();
  std::vector<std::vector<Witness>> found(count);
  std::vector<std::uint64_t> tuples(count, 0);
  ParallelFor(count, jobs, [&](std::size_t m) {
    const FeatureSet s = FeatureSet::FromMask(m);
    const FeatureSet::Mask outside = full & ~m;
    if (property == Property::kMonotone) {
      for (int i : FeatureSet::FromMask(outside)) {
        ++tuples[m];
        if (auto w = Probe(property, values, s, s.with(i), i)) found[m].push_back(std::move(*w));
      }
      return;
    }
    // Every superset S' of S, then every i outside S'.
    FeatureSet::Mask extra = 0;
    while (true) {
      const FeatureSet s_prime = FeatureSet::FromMask(m | extra);
      for (int i : s_prime.complement(n)) {
        ++tuples[m];
        if (auto w = Probe(property, values, s, s_prime, i)) found[m].push_back(std::move(*w));
      }
      if (extra == outside) break;
      extra = (extra - outside) & outside;
    }
  });
  AuditReport report;
  report.property = property;
  report.mode = AuditMode::Exhaustive();
  report.num_features = n;
  for (std::size_t m = 0; m < count; ++m) {
    report.tuples += tuples[m];
    for (auto& w : found[m]) report.witnesses.push_back(std::move(w));
  }
  Normalize(report);
  return report;
}

AuditReport Sampled(Property property, const SetFunction& v, AuditMode mode) {
  const int n = v.num_features();
  const Values values(v, false, 1);
  std::mt19937_64 rng(mode.seed);
  std::bernoulli_distribution coin(0.5);
  AuditReport report;
  report.property = property;
  report.mode = mode;
  report.num_features = n;
  if (n == 0) return report;
  for (int drawn = 0; drawn < mode.samples; ++drawn) {
    FeatureSet s;
    for (int f = 0; f < n; ++f) {
      if (coin(rng)) s = s.with(f);
    }
    FeatureSet s_prime = s;
    if (property != Property::kMonotone) {
      for (int f : s.complement(n)) {
        if (coin(rng)) s_prime = s_prime.with(f);
      }
    }
    const std::vector<int> outside = s_prime.complement(n).indices();
    if (outside.empty()) continue;
    const int i = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
    if (property == Property::kMonotone) s_prime = s.with(i);
    ++report.tuples;
    if (auto w = Probe(property, values, s, s_prime, i)) report.witnesses.push_back(std::move(*w));
  }
  Normalize(report);
  return report;
}

}  // namespace

AuditReport CheckProperty(Property property, const SetFunction& v, AuditMode mode, int jobs) {
  if (mode.exhaustive) return Exhaustive(property, v, jobs);
  if (mode.samples < 0) throw Error(ErrorCode::kInvalidInput, "sample count must be non-negative");
  return Sampled(property, v, mode);
}

AuditReport CheckMonotone(const SetFunction& v, AuditMode mode, int jobs) {
  return CheckProperty(Property::kMonotone, v, mode, jobs);
}
AuditReport CheckSubmodular(const SetFunction& v, AuditMode mode, int jobs) {
  return CheckProperty(Property::kSubmodular, v, mode, jobs);
}
AuditReport CheckSupermodular(const SetFunction& v, AuditMode mode, int jobs) {
  return CheckProperty(Property::kSupermodular, v, mode, jobs);
}

bool Revalidates(Property property, const SetFunction& v, const Witness& w) {
  const Values values(v, false, 1);
  const auto again = Probe(property, values, w.s, w.s_prime, w.i);
  return again.has_value() && again->values == w.values;
}

}  // namespace probex
