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

#include "probex/bench.h"

#include <chrono>

#include "probex/errors.h"
#include "probex/generators.h"
#include "probex/io.h"

namespace probex {

namespace {

void Measure(const SetFunction& v, BoundKind kind, BenchRow& base, const BenchConfig& config,
             std::vector<BenchRow>& out) {
  const int n = v.num_features();
  try {
    Rational smallest = v(FeatureSet{0});
    for (int i = 1; i < n; ++i) smallest = std::min(smallest, v(FeatureSet{i}));
    base.min_singleton = smallest;
    base.ln_bound = ApproxBound(v, BoundKind::kContrastive);
    if (kind == BoundKind::kSufficient) base.curvature = ComputeCurvature(v).value;
    base.bound = ApproxBound(v, kind);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRequiresPreprocessing) throw;
  }
  const Rational top = v(FeatureSet::Full(n));
  for (const Rational& q : config.delta_fractions) {
    BenchRow row = base;
    row.delta = q * top;
    const ExplanationQuery query{v, row.delta, Objective::kCardinalGreedy, config.jobs};
    const auto start = std::chrono::steady_clock::now();
    row.greedy_size = CardinalGreedy(query).subset.size();
    row.oracle_size = BruteForceCardinalMin(query).subset.size();
    if (config.timings) {
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    row.ratio = row.oracle_size == 0 ? 1.0 : static_cast<double>(row.greedy_size) / row.oracle_size;
    out.push_back(std::move(row));
  }
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  if (config.max_features > kDefaultCardinalCap) {
    throw Error(ErrorCode::kCapExceeded, "bench max_features exceeds the exhaustive cap");
  }
  std::vector<BenchRow> out;
  for (int t = 0; t < config.instances; ++t) {
    Rng rng(config.seed * 1000003ULL + static_cast<std::uint64_t>(t));
    const int n = UniformInt(rng, config.min_features, config.max_features);
    const Domains domains = RandomDomains(rng, n, config.max_domain);
    const EmpiricalDistribution dataset = ProductGridDataset(rng, domains, config.max_rows);
    // A constant-column dataset leaves nothing to split on; the tree degenerates to a leaf.
    const FeatureSet varying = VaryingFeatures(dataset);
    auto model = std::make_shared<const Model>(
        varying.empty() ? Model(domains, DecisionTree::Constant(0), 2)
                        : RandomTreeModel(rng, domains, config.max_depth, 2, varying));
    const ReducedInstance reduced = Preprocess(model, dataset);

    BenchRow base;
    base.instance = t;
    base.n = n;
    base.n_reduced = reduced.model->num_features();
    base.rows = dataset.size();
    if (base.n_reduced == 0) {
      base.kind = "any";
      base.degenerate = true;
      out.push_back(base);
      continue;
    }
    EvalOptions options;
    options.jobs = config.jobs;
    if (config.contrastive) {
      base.kind = "contrastive";
      const ValueFunction v(Mode::kGlobalContrastive, reduced.model, reduced.distribution, std::nullopt,
                            Semantics::kConditional, options);
      Measure(v, BoundKind::kContrastive, base, config, out);
    }
    if (config.sufficient) {
      base.kind = "sufficient";
      const ValueFunction v(Mode::kGlobalSufficient, reduced.model, reduced.distribution, std::nullopt,
                            Semantics::kConditional, options);
      Measure(v, BoundKind::kSufficient, base, config, out);
    }
  }
  return out;
}

std::string BenchCsv(const std::vector<BenchRow>& rows, bool timings) {
  std::string csv =
      "instance,kind,n,n_reduced,rows,delta,greedy_size,oracle_size,ratio,ln_bound,curvature,bound,"
      "min_singleton,within_bound,degenerate";
  if (timings) csv += ",wall_ms";
  csv += '\n';
  auto real = [](const std::optional<double>& v) { return v ? FormatReal(*v) : std::string(); };
  for (const BenchRow& r : rows) {
    csv += std::to_string(r.instance) + ',' + r.kind + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.n_reduced) + ',' + std::to_string(r.rows) + ',' +
           (r.degenerate ? std::string() : ToString(r.delta)) + ',' + std::to_string(r.greedy_size) + ',' +
           std::to_string(r.oracle_size) + ',' + FormatReal(r.ratio) + ',' + real(r.ln_bound) + ',' +
           (r.curvature ? ToString(*r.curvature) : std::string()) + ',' + real(r.bound) + ',' +
           (r.min_singleton ? ToString(*r.min_singleton) : std::string()) + ',' +
           (r.within_bound() ? "1" : "0") + ',' + (r.degenerate ? "1" : "0");
    if (timings) csv += ',' + real(r.wall_ms);
    csv += '\n';
  }
  return csv;
}

}  // namespace probex
