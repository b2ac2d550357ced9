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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "instances.h"
#include "oracle.h"
#include "probex/audit.h"
#include "probex/bench.h"
#include "probex/errors.h"
#include "probex/explain.h"
#include "probex/generators.h"
#include "probex/io.h"

namespace probex {
namespace {

using testing::R;

// Collects the first few mismatches for the report line.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ << (failed_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " checks";
    if (failed_) s << "; first failures: " << notes_.str();
    return s.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::ostringstream notes_;
};

std::string Set(FeatureSet s) { return s.ToString(); }

template <typename Fn>
void ForEachSubset(int n, Fn fn) {
  for (FeatureSet::Mask m = 0; m < (FeatureSet::Mask{1} << n); ++m) fn(FeatureSet::FromMask(m));
}

// ------------------------------------------------------------------ 1
std::string GoldenTables(Check& c) {
  const auto e = testing::Value(Mode::kLocalSufficient, testing::AndOr3(), testing::Uniform(3),
                                FeatureVector{1, 1, 1});
  const std::vector<Rational> e_table = {R(3, 8), R(1, 2), R(1, 2), R(1, 2), R(3, 4), R(1), R(1), R(1)};
  ForEachSubset(3, [&](FeatureSet s) { c.Expect(e(s) == e_table[s.mask()], "E " + Set(s) + " = " + ToString(e(s))); });
  const auto g = testing::Value(Mode::kLocalSufficient, testing::Or2(), testing::Uniform(2), FeatureVector{0, 1});
  const std::vector<Rational> g_table = {R(3, 4), R(1, 2), R(1), R(1)};
  ForEachSubset(2, [&](FeatureSet s) { c.Expect(g(s) == g_table[s.mask()], "G " + Set(s) + " = " + ToString(g(s))); });
  return "local sufficiency tables for (x1|x2)&x3 and x1|x2";
}

// ------------------------------------------------------------------ 2
std::string LocalDuality(Check& c) {
  auto dual = [&](const testing::ModelPtr& model, const testing::DistPtr& dist, const FeatureVector& x,
                  const std::string& tag) {
    const int n = model->num_features();
    const auto suff = testing::Value(Mode::kLocalSufficient, model, dist, x);
    const auto con = testing::Value(Mode::kLocalContrastive, model, dist, x);
    ForEachSubset(n, [&](FeatureSet s) {
      c.Expect(con(s) == 1 - suff(s.complement(n)), tag + " " + Set(s));
    });
  };
  dual(testing::AndOr3(), testing::Uniform(3), {1, 1, 1}, "E");
  dual(testing::Or2(), testing::Uniform(2), {0, 1}, "G");
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(1000 + seed);
    const int n = UniformInt(rng, 1, 6);
    const Domains d = RandomDomains(rng, n, 2);
    auto model = std::make_shared<const Model>(RandomTruthTableModel(rng, d));
    auto dist = std::make_shared<const Distribution>(RandomProduct(rng, d));
    FeatureVector x(n);
    for (auto& v : x) v = UniformInt(rng, 0, 1);
    dual(model, dist, x, "seed " + std::to_string(seed));
  }
  // Reference contrastive tables list v_suff of the complement: compare after 1 - (.).
  const auto e = testing::Value(Mode::kLocalContrastive, testing::AndOr3(), testing::Uniform(3),
                                FeatureVector{1, 1, 1});
  const std::vector<Rational> e_reference = {R(1), R(1), R(1), R(3, 4), R(1, 2), R(1, 2), R(1, 2), R(3, 8)};
  ForEachSubset(3, [&](FeatureSet s) { c.Expect(e(s) == 1 - e_reference[s.mask()], "E reference " + Set(s)); });
  const auto g = testing::Value(Mode::kLocalContrastive, testing::Or2(), testing::Uniform(2), FeatureVector{0, 1});
  const std::vector<Rational> g_reference = {R(1), R(1), R(1, 2), R(3, 4)};
  ForEachSubset(2, [&](FeatureSet s) { c.Expect(g(s) == 1 - g_reference[s.mask()], "G reference " + Set(s)); });
  return "v_con(S) = 1 - v_suff(~S), 2 pinned + 100 random tables; tabulated contrastive values after 1-(.)";
}

// ------------------------------------------------------------------ 3
std::string GlobalDuality(Check& c) {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(2000 + seed);
    const bool empirical = seed % 2 == 0;
    const int n = UniformInt(rng, 1, empirical ? 8 : 6);
    const Domains d = RandomDomains(rng, n, empirical ? 3 : 2);
    testing::ModelPtr model;
    switch (seed % 4) {
      case 0: model = std::make_shared<const Model>(RandomTreeModel(rng, d, 4, 3)); break;
      case 1: model = std::make_shared<const Model>(RandomEnsembleModel(rng, d, 3, 3)); break;
      case 2: model = std::make_shared<const Model>(RandomTruthTableModel(rng, d, 2)); break;
      default: model = std::make_shared<const Model>(RandomTreeModel(rng, d, 5, 2)); break;
    }
    testing::DistPtr dist = empirical
                                ? std::make_shared<const Distribution>(RandomDataset(rng, d, UniformInt(rng, 1, 24)))
                                : std::make_shared<const Distribution>(RandomProduct(rng, d));
    const auto suff = testing::Value(Mode::kGlobalSufficient, model, dist);
    const auto support = oracle::SupportOf(*dist);
    ForEachSubset(n, [&](FeatureSet s) {
      // Contrastive side straight from its definition, not through the identity.
      c.Expect(oracle::GlobalCon(*model, support, s) == 1 - suff(s.complement(n)),
               "seed " + std::to_string(seed) + " " + Set(s));
    });
  }
  return "definition-level v_con vs 1 - v_suff(~S), 100 random (model, distribution) pairs, n <= 8";
}

// ------------------------------------------------------------------ 4
std::string CorrelatedPair(Check& c) {
  const auto v = testing::Value(Mode::kGlobalSufficient, testing::First2(), testing::CorrelatedPair());
  c.Expect(MarginalGain(v, FeatureSet(), 1) == R(2, 25), "gain at {} = " + ToString(MarginalGain(v, FeatureSet(), 1)));
  c.Expect(MarginalGain(v, FeatureSet{0}, 1) == R(0), "gain at {0} = " + ToString(MarginalGain(v, FeatureSet{0}, 1)));
  const AuditReport report = CheckSupermodular(v);
  bool found = false;
  for (const Witness& w : report.witnesses) found |= w.s == FeatureSet() && w.s_prime == FeatureSet{0} && w.i == 1;
  c.Expect(!report.holds && found, "supermodularity witness ({}, {0}, 1) missing");
  return "weights 4,2,1,3 of 10 on f=x1: gains 2/25 and 0, supermodularity witness";
}

// ------------------------------------------------------------------ 5
std::string PropertySuites(Check& c) {
  for (int seed = 0; seed < 200; ++seed) {
    Rng rng(5000 + seed);
    const int n = UniformInt(rng, 1, 8);
    const Domains d = RandomDomains(rng, n, n <= 5 ? 3 : 2);
    testing::ModelPtr model;
    switch (seed % 3) {
      case 0: model = std::make_shared<const Model>(RandomTreeModel(rng, d, 5, 2 + seed % 2)); break;
      case 1: model = std::make_shared<const Model>(RandomEnsembleModel(rng, d, 3, 3)); break;
      default: model = std::make_shared<const Model>(RandomTruthTableModel(rng, d, 2)); break;
    }
    const std::string tag = "seed " + std::to_string(seed);
    auto data = std::make_shared<const Distribution>(RandomDataset(rng, d, UniformInt(rng, 1, 20)));
    c.Expect(CheckMonotone(testing::Value(Mode::kGlobalSufficient, model, data)).holds, tag + " monotone suff");
    c.Expect(CheckMonotone(testing::Value(Mode::kGlobalContrastive, model, data)).holds, tag + " monotone con");
    auto product = std::make_shared<const Distribution>(RandomProduct(rng, d));
    c.Expect(CheckSupermodular(testing::Value(Mode::kGlobalSufficient, model, product)).holds, tag + " supermodular");
    c.Expect(CheckSubmodular(testing::Value(Mode::kGlobalContrastive, model, product)).holds, tag + " submodular");
  }
  // Local value functions: each property fails on the pinned instances.
  for (Mode mode : {Mode::kLocalSufficient, Mode::kLocalContrastive}) {
    const std::string name = ModeName(mode);
    const auto g = testing::Value(mode, testing::Or2(), testing::Uniform(2), FeatureVector{0, 1});
    const auto e = testing::Value(mode, testing::AndOr3(), testing::Uniform(3), FeatureVector{1, 1, 1});
    c.Expect(!CheckMonotone(g).holds, name + " monotone on x1|x2");
    c.Expect(!CheckSubmodular(e).holds, name + " submodular on (x1|x2)&x3");
    c.Expect(!CheckSupermodular(e).holds, name + " supermodular on (x1|x2)&x3");
  }
  return "200 random instances n <= 8: global monotone (empirical), supermodular/submodular (product); local failures";
}

// ------------------------------------------------------------------ 6
std::string BackendEquivalence(Check& c) {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(6000 + seed);
    const int n = UniformInt(rng, 1, 8);
    const Domains d = RandomDomains(rng, n, n <= 5 ? 3 : 2);
    const Model tree = RandomTreeModel(rng, d, 5, 3);
    const ProductDistribution product = RandomProduct(rng, d);
    const Model dnf = RandomOdnfModel(rng, n, 5);
    const ProductDistribution binary = RandomProduct(rng, Domains::Binary(n));
    const EmpiricalDistribution data = RandomDataset(rng, d, UniformInt(rng, 1, 20));
    // A grid dataset is also a product distribution with its empirical marginals.
    const EmpiricalDistribution grid = ProductGridDataset(rng, d, 32);
    std::vector<std::vector<Rational>> marginals(n);
    for (int f = 0; f < n; ++f) {
      for (int v : d.values(f)) {
        int hits = 0;
        for (const auto& row : grid.rows()) hits += row[f] == v;
        marginals[f].push_back(R(hits, grid.size()));
      }
    }
    const ProductDistribution grid_product(d, marginals);
    const std::string tag = "seed " + std::to_string(seed);
    ForEachSubset(n, [&](FeatureSet s) {
      const Rational leaf = EvalGlobalSuffLeafPairs(tree, product, s);
      c.Expect(leaf == EvalGlobalSuffBruteForce(tree, product, s), tag + " leaf/brute " + Set(s));
      c.Expect(EvalGlobalSuffTermPairs(dnf, binary, s) == EvalGlobalSuffBruteForce(dnf, binary, s),
               tag + " term/brute " + Set(s));
      c.Expect(EvalGlobalSuffEmpirical(tree, data, s) == EvalGlobalSuffBruteForce(tree, data, s),
               tag + " empirical/brute " + Set(s));
      c.Expect(EvalGlobalSuffEmpirical(tree, grid, s) == EvalGlobalSuffLeafPairs(tree, grid_product, s),
               tag + " empirical/leaf on grid " + Set(s));
    });
  }
  return "leaf-pair, term-pair, empirical pairwise and brute force agree exactly, 100 instances n <= 8";
}

// ------------------------------------------------------------------ 7
std::string GreedySubsetMinimality(Check& c) {
  for (int seed = 0; seed < 40; ++seed) {
    Rng rng(7000 + seed);
    const int n = UniformInt(rng, 2, 10);
    const Domains d = RandomDomains(rng, n, 2);
    auto model = std::make_shared<const Model>(
        seed % 2 ? RandomTreeModel(rng, d, 6, 2) : RandomEnsembleModel(rng, d, 3, 4, 2));
    testing::DistPtr dist = seed % 4 < 2
                                ? std::make_shared<const Distribution>(RandomDataset(rng, d, UniformInt(rng, 4, 24)))
                                : std::make_shared<const Distribution>(RandomProduct(rng, d));
    for (Mode mode : {Mode::kGlobalSufficient, Mode::kGlobalContrastive}) {
      const auto v = testing::Value(mode, model, dist);
      const Rational top = v(FeatureSet::Full(n));
      for (int k = 1; k <= 5; ++k) {
        const Rational delta = top * R(k, 5);
        const ExplanationResult r = SubsetMinimalGreedy({v, delta});
        c.Expect(oracle::IsSubsetMinimal(v, r.subset, delta),
                 "seed " + std::to_string(seed) + " " + ModeName(mode) + " delta " + ToString(delta));
      }
    }
  }
  // Pinned local instance: greedy removal stalls at {2,3} while {} is already a 1/2-explanation.
  auto model = testing::Table(4, {0, 0, 1, 0, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1});
  const auto local = testing::Value(Mode::kLocalSufficient, model, testing::Uniform(4), FeatureVector{1, 1, 1, 0});
  const ExplanationResult r = SubsetMinimalGreedy({local, R(1, 2)});
  c.Expect(r.subset == (FeatureSet{2, 3}) && !oracle::IsSubsetMinimal(local, r.subset, R(1, 2)),
           "pinned local instance returned " + Set(r.subset));
  return "global greedy outputs subset-minimal by powerset scan (40 instances n <= 10, 5 deltas); local counterexample";
}

// ------------------------------------------------------------------ 8
std::string ApproximationRatios(Check& c) {
  BenchConfig config;
  config.instances = 80;
  config.seed = 8;
  const std::vector<BenchRow> rows = RunBench(config);
  std::map<int, bool> instances;
  int ratio_rows = 0, ratio_ok = 0, curvature_instances = 0, curvature_ok = 0, floor_instances = 0, floor_ok = 0;
  int within_one_plus = 0;
  for (const BenchRow& row : rows) {
    if (row.degenerate) continue;
    instances[row.instance] = true;
    ++ratio_rows;
    ratio_ok += row.within_bound();
    within_one_plus += row.bound && row.ratio <= 1 + *row.bound;
  }
  // Per-instance checks use one row per (instance, kind).
  std::map<std::pair<int, std::string>, const BenchRow*> per_kind;
  for (const BenchRow& row : rows) {
    if (!row.degenerate) per_kind.emplace(std::make_pair(row.instance, row.kind), &row);
  }
  for (const auto& [key, row] : per_kind) {
    const Rational d2 = R(1, static_cast<long long>(row->rows) * row->rows);
    if (key.second == "contrastive") {
      ++floor_instances;
      const bool ok = row->min_singleton && *row->min_singleton >= d2;
      floor_ok += ok;
      c.Expect(ok, "instance " + std::to_string(key.first) + " min v_con({i}) below 1/|D|^2");
    } else {
      ++curvature_instances;
      const long long rows2 = static_cast<long long>(row->rows) * row->rows;
      const bool ok = row->curvature && *row->curvature <= 0 && *row->curvature >= R(1 - rows2);
      curvature_ok += ok;
      c.Expect(ok, "instance " + std::to_string(key.first) + " curvature " +
                       (row->curvature ? ToString(*row->curvature) : std::string("undefined")));
    }
  }
  for (const BenchRow& row : rows) {
    if (row.degenerate) continue;
    c.Expect(row.within_bound(), "instance " + std::to_string(row.instance) + " " + row.kind + " ratio " +
                                     FormatReal(row.ratio) + " > bound " +
                                     (row.bound ? FormatReal(*row.bound) : std::string("undefined")));
  }
  c.Expect(instances.size() >= 50, "only " + std::to_string(instances.size()) + " non-degenerate instances");
  std::ostringstream s;
  s << instances.size() << " preprocessed instances: ratio<=bound " << ratio_ok << "/" << ratio_rows
    << " rows (ratio<=1+bound " << within_one_plus << "/" << ratio_rows << "), min v_con({i})>=1/|D|^2 "
    << floor_ok << "/" << floor_instances << ", 1-|D|^2<=k<=0 " << curvature_ok << "/" << curvature_instances;
  return s.str();
}

// ------------------------------------------------------------------ 9
std::string MajorityCounts(Check& c) {
  for (int n : {3, 5}) {
    const auto v = testing::Value(Mode::kGlobalSufficient, testing::Majority(n), testing::Uniform(n));
    const int k = n / 2;
    const Rational low = v(FeatureSet::Full(k)), high = v(FeatureSet::Full(k + 1));
    const auto sets = EnumerateSubsetMinimal(v, (low + high) / 2);
    const std::size_t expected = n == 3 ? 3 : 10;
    c.Expect(low < high && sets.size() == expected,
             "n=" + std::to_string(n) + " gave " + std::to_string(sets.size()) + " sets");
  }
  return "majority of 3 and 5: 3 and 10 subset-minimal sets";
}

// ------------------------------------------------------------------ 10
std::string DeltaOne(Check& c) {
  for (int seed = 0; seed < 20; ++seed) {
    Rng rng(10000 + seed);
    const int n = UniformInt(rng, 2, 8);
    const Domains d = Domains::Binary(n);
    auto model = std::make_shared<const Model>(
        seed % 2 ? RandomTreeModel(rng, d, 5, 2) : RandomTruthTableModel(rng, d, 2));
    const auto v = testing::Value(Mode::kGlobalSufficient, model, testing::Uniform(n));
    ForEachSubset(n, [&](FeatureSet s) {
      c.Expect((v(s) == 1) == oracle::UniversallySufficient(*model, s), "seed " + std::to_string(seed) + " " + Set(s));
    });
    const ExplanationResult r = SubsetMinimalGreedy({v, R(1)});
    bool minimal = oracle::UniversallySufficient(*model, r.subset);
    for (int i : r.subset) minimal = minimal && !oracle::UniversallySufficient(*model, r.subset.without(i));
    c.Expect(minimal, "seed " + std::to_string(seed) + " greedy reason " + Set(r.subset));
  }
  return "v_suff(S) = 1 iff S is a sufficient reason by universal quantification, 20 instances n <= 8";
}

}  // namespace
}  // namespace probex

int main() {
  using namespace probex;
  struct Criterion {
    const char* name;
    std::function<std::string(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden sufficiency tables", GoldenTables},
      {"local duality", LocalDuality},
      {"global duality", GlobalDuality},
      {"supermodularity failure without independence", CorrelatedPair},
      {"property suites", PropertySuites},
      {"backend equivalence", BackendEquivalence},
      {"greedy subset-minimality", GreedySubsetMinimality},
      {"approximation ratios", ApproximationRatios},
      {"majority finite counts", MajorityCounts},
      {"delta=1 consistency", DeltaOne},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = criteria[k].run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !check.ok();
    std::printf("%s [%zu] %s: %s (%s, %.1fs)\n", check.ok() ? "PASS" : "FAIL", k + 1, criteria[k].name,
                detail.c_str(), check.Summary().c_str(), seconds);
    std::fflush(stdout);
  }
  return failures;
}
