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

#ifndef PROBEX_TESTS_ORACLE_H_
#define PROBEX_TESTS_ORACLE_H_

// Definition-level reference computations. Deliberately naive: every value is
// a direct sum over the support, sharing no code with the evaluators.

#include <map>
#include <vector>

#include "probex/distribution.h"
#include "probex/model.h"
#include "probex/value_function.h"

namespace probex::oracle {

struct Support {
  std::vector<FeatureVector> points;
  std::vector<Rational> mass;
};

inline Support SupportOf(const Distribution& dist) {
  Support out;
  if (const auto* e = dist.empirical()) {
    std::map<FeatureVector, int> counts;
    for (const auto& row : e->rows()) ++counts[row];
    for (const auto& [row, c] : counts) {
      out.points.push_back(row);
      out.mass.push_back(Rational(c) / Rational(e->size()));
    }
    return out;
  }
  const ProductDistribution& p = *dist.product();
  const Domains& d = p.domains();
  std::vector<int> idx(d.num_features(), 0);
  while (true) {
    FeatureVector x(d.num_features());
    Rational m = 1;
    for (int f = 0; f < d.num_features(); ++f) {
      x[f] = d.values(f)[idx[f]];
      m *= p.marginal(f)[idx[f]];
    }
    if (m > 0) {
      out.points.push_back(x);
      out.mass.push_back(m);
    }
    int f = d.num_features() - 1;
    while (f >= 0 && ++idx[f] == d.size(f)) idx[f--] = 0;
    if (f < 0) break;
  }
  return out;
}

inline bool AgreeOn(const FeatureVector& a, const FeatureVector& b, FeatureSet s) {
  for (int i : s) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// Pr(f(z) = f(x) | z_S = x_S)
inline Rational LocalSuff(const Classifier& f, const Support& d, const FeatureVector& x, FeatureSet s) {
  Rational hit = 0, total = 0;
  const ClassLabel y = f.Predict(x);
  for (std::size_t k = 0; k < d.points.size(); ++k) {
    if (!AgreeOn(d.points[k], x, s)) continue;
    total += d.mass[k];
    if (f.Predict(d.points[k]) == y) hit += d.mass[k];
  }
  return hit / total;
}

// Pr(f(z) != f(x) | z_{~S} = x_{~S})
inline Rational LocalCon(const Classifier& f, const Support& d, const FeatureVector& x, FeatureSet s) {
  Rational miss = 0, total = 0;
  const ClassLabel y = f.Predict(x);
  const FeatureSet fixed = s.complement(f.num_features());
  for (std::size_t k = 0; k < d.points.size(); ++k) {
    if (!AgreeOn(d.points[k], x, fixed)) continue;
    total += d.mass[k];
    if (f.Predict(d.points[k]) != y) miss += d.mass[k];
  }
  return miss / total;
}

inline Rational GlobalSuff(const Classifier& f, const Support& d, FeatureSet s) {
  Rational out = 0;
  for (std::size_t k = 0; k < d.points.size(); ++k) out += d.mass[k] * LocalSuff(f, d, d.points[k], s);
  return out;
}

inline Rational GlobalCon(const Classifier& f, const Support& d, FeatureSet s) {
  Rational out = 0;
  for (std::size_t k = 0; k < d.points.size(); ++k) out += d.mass[k] * LocalCon(f, d, d.points[k], s);
  return out;
}

// (1/|D|) |{z in D : f(x_S; z_{~S}) = f(x)}|
inline Rational Baseline(const Classifier& f, const EmpiricalDistribution& d, const FeatureVector& x,
                         FeatureSet s) {
  int hit = 0;
  for (const auto& z : d.rows()) {
    FeatureVector h = z;
    for (int i : s) h[i] = x[i];
    if (f.Predict(h) == f.Predict(x)) ++hit;
  }
  return Rational(hit) / Rational(d.size());
}

// Universal quantification: x_S = z_S implies f(x) = f(z) over the domain.
inline bool UniversallySufficient(const Classifier& f, FeatureSet s) {
  std::vector<FeatureVector> all;
  std::vector<ClassLabel> label;
  for (const auto& x : DomainRange(f.domains())) {
    all.push_back(x);
    label.push_back(f.Predict(x));
  }
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (label[a] != label[b] && AgreeOn(all[a], all[b], s)) return false;
    }
  }
  return true;
}

// v(S) >= delta and no proper subset (of any size) reaches delta.
inline bool IsSubsetMinimal(const SetFunction& v, FeatureSet s, const Rational& delta) {
  if (v(s) < delta) return false;
  for (FeatureSet::Mask m = 0; m < s.mask(); ++m) {
    if ((m & ~s.mask()) == 0 && v(FeatureSet::FromMask(m)) >= delta) return false;
  }
  return true;
}

inline std::size_t MinCardinality(const SetFunction& v, const Rational& delta) {
  const int n = v.num_features();
  std::size_t best = n + 1;
  for (FeatureSet::Mask m = 0; m < (FeatureSet::Mask{1} << n); ++m) {
    const FeatureSet s = FeatureSet::FromMask(m);
    if (static_cast<std::size_t>(s.size()) < best && v(s) >= delta) best = s.size();
  }
  return best;
}

}  // namespace probex::oracle

#endif  // PROBEX_TESTS_ORACLE_H_
