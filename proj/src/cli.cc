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

#include "probex/cli.h"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "probex/audit.h"
#include "probex/bench.h"
#include "probex/errors.h"
#include "probex/explain.h"
#include "probex/io.h"

namespace probex {

namespace {

struct RunConfig {
  std::string model_path;
  std::string dist_path;
  std::string instance;
  std::string mode = "global";
  std::string kind = "sufficient";
  std::string delta = "1";
  std::string objective = "subset-minimal";
  std::string semantics = "conditional";
  bool preprocess = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string out_path;

  std::string property = "monotone";
  std::string audit_mode = "exhaustive";
  int samples = 1000;
};

// A loaded, optionally preprocessed value function plus the index map back
// to the original features.
struct Prepared {
  std::shared_ptr<const ValueFunction> v;
  std::shared_ptr<const MaskedModel> mask;  // set when preprocessed

  FeatureSet ToOriginal(FeatureSet s) const { return mask ? mask->ToOriginal(s) : s; }
};

Mode ParseMode(const RunConfig& c) {
  const bool local = c.mode == "local";
  const bool suff = c.kind == "sufficient";
  if (local) return suff ? Mode::kLocalSufficient : Mode::kLocalContrastive;
  return suff ? Mode::kGlobalSufficient : Mode::kGlobalContrastive;
}

Prepared Prepare(const RunConfig& c, bool force_preprocess) {
  std::shared_ptr<const Classifier> model = LoadModel(c.model_path);
  std::shared_ptr<const Distribution> dist = LoadDistribution(c.dist_path, model->domains());
  const Mode mode = ParseMode(c);
  std::optional<FeatureVector> instance;
  if (IsLocal(mode)) {
    if (c.instance.empty()) throw Error(ErrorCode::kInvalidInput, "local mode requires --instance");
    instance = ParseInstance(c.instance);
    model->domains().Validate(*instance);
  } else if (!c.instance.empty()) {
    throw Error(ErrorCode::kInvalidInput, "global mode does not take --instance");
  }
  Prepared p;
  if (c.preprocess || (force_preprocess && dist->empirical())) {
    if (!dist->empirical()) throw Error(ErrorCode::kInvalidInput, "--preprocess requires an empirical distribution");
    const ReducedInstance reduced = Preprocess(model, *dist->empirical());
    p.mask = reduced.model;
    model = reduced.model;
    dist = reduced.distribution;
    if (instance) instance = reduced.model->Project(*instance);
  }
  EvalOptions options;
  options.jobs = c.jobs;
  const Semantics semantics = c.semantics == "baseline" ? Semantics::kBaseline : Semantics::kConditional;
  p.v = std::make_shared<const ValueFunction>(mode, model, dist, instance, semantics, options);
  return p;
}

void Emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kLoadError, c.out_path + ": cannot open for writing");
  file << text;
}

int CmdExplain(const RunConfig& c, std::ostream& out) {
  const Prepared p = Prepare(c, false);
  static const std::map<std::string, Objective> kObjectives = {
      {"subset-minimal", Objective::kSubsetMinimal},
      {"cardinal-approx", Objective::kCardinalGreedy},
      {"cardinal-exact", Objective::kCardinalExact}};
  const Objective objective = kObjectives.at(c.objective);
  const ExplanationQuery query{*p.v, ParseRational(c.delta), objective, c.jobs};
  ExplanationResult result = Explain(query);
  if (objective == Objective::kCardinalGreedy && !IsLocal(p.v->mode())) {
    try {
      result.bound = ApproxBound(*p.v, IsSufficient(p.v->mode()) ? BoundKind::kSufficient : BoundKind::kContrastive);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRequiresPreprocessing) throw;
    }
  }
  result.subset = p.ToOriginal(result.subset);
  Emit(c, ResultToJson(result).dump(2) + "\n", out);
  return kExitOk;
}

int CmdAudit(const RunConfig& c, std::ostream& out) {
  const Prepared p = Prepare(c, false);
  static const std::map<std::string, Property> kProperties = {
      {"monotone", Property::kMonotone}, {"submodular", Property::kSubmodular},
      {"supermodular", Property::kSupermodular}};
  const AuditMode mode =
      c.audit_mode == "sampled" ? AuditMode::Sampled(c.samples, c.seed) : AuditMode::Exhaustive();
  AuditReport report = CheckProperty(kProperties.at(c.property), *p.v, mode, c.jobs);
  for (Witness& w : report.witnesses) {
    w.s = p.ToOriginal(w.s);
    w.s_prime = p.ToOriginal(w.s_prime);
    if (p.mask) w.i = p.mask->original_index()[w.i];
  }
  Emit(c, ReportToJson(report).dump(2) + "\n", out);
  return kExitOk;
}

int CmdCurvature(const RunConfig& c, std::ostream& out) {
  const Prepared p = Prepare(c, true);
  if (IsLocal(p.v->mode())) throw Error(ErrorCode::kInvalidInput, "curvature is defined for global modes");
  Json doc = CurvatureToJson(ComputeCurvature(*p.v));
  doc["bound"] = FormatReal(
      ApproxBound(*p.v, IsSufficient(p.v->mode()) ? BoundKind::kSufficient : BoundKind::kContrastive));
  Json surviving = Json::array();
  for (int f : p.ToOriginal(FeatureSet::Full(p.v->num_features()))) surviving.push_back(f);
  doc["surviving"] = surviving;
  Emit(c, doc.dump(2) + "\n", out);
  return kExitOk;
}

int CodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kUnsatisfiable: return kExitUnsatisfiable;
    case ErrorCode::kLoadError:
    case ErrorCode::kInvalidInput: return kExitUsage;
    default: return kExitFailure;
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic sufficient and contrastive explanations"};
  app.require_subcommand(1);
  RunConfig c;
  BenchConfig bench;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", c.model_path, "Model JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--dist", c.dist_path, "Distribution JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--instance", c.instance, "Instance for local modes, e.g. 1,0,1");
    sub->add_option("--mode", c.mode)->check(CLI::IsMember({"local", "global"}));
    sub->add_option("--kind", c.kind)->check(CLI::IsMember({"sufficient", "contrastive"}));
    sub->add_option("--semantics", c.semantics)->check(CLI::IsMember({"conditional", "baseline"}));
    sub->add_flag("--preprocess", c.preprocess, "Drop features redundant on the dataset");
    sub->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out_path, "Write output here instead of stdout");
  };

  CLI::App* explain = app.add_subcommand("explain", "Compute a delta-explanation");
  add_common(explain);
  explain->add_option("--delta", c.delta, "Threshold as p/q");
  explain->add_option("--objective", c.objective)
      ->check(CLI::IsMember({"subset-minimal", "cardinal-approx", "cardinal-exact"}));

  CLI::App* audit = app.add_subcommand("audit", "Audit monotonicity or (sub/super)modularity");
  add_common(audit);
  audit->add_option("--property", c.property)->check(CLI::IsMember({"monotone", "submodular", "supermodular"}));
  audit->add_option("--audit-mode", c.audit_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  audit->add_option("--samples", c.samples)->check(CLI::NonNegativeNumber);
  audit->add_option("--seed", c.seed);

  CLI::App* curvature = app.add_subcommand("curvature", "Total curvature and approximation bound");
  add_common(curvature);

  CLI::App* bench_cmd = app.add_subcommand("bench", "Greedy versus exhaustive cardinality table (CSV)");
  bench_cmd->add_option("--instances", bench.instances)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--max-features", bench.max_features)->check(CLI::Range(1, kDefaultCardinalCap));
  bench_cmd->add_option("--max-rows", bench.max_rows)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--timings", bench.timings, "Append wall-clock milliseconds (not reproducible)");
  bench_cmd->add_option("--out", c.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*explain) return CmdExplain(c, out);
    if (*audit) return CmdAudit(c, out);
    if (*curvature) return CmdCurvature(c, out);
    bench.min_features = std::min(bench.min_features, bench.max_features);
    Emit(c, BenchCsv(RunBench(bench), bench.timings), out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return CodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace probex
