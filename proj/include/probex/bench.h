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

#ifndef PROBEX_BENCH_H_
#define PROBEX_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "probex/explain.h"
#include "probex/rational.h"

namespace probex {

struct BenchConfig {
  int instances = 50;
  std::uint64_t seed = 1;
  int min_features = 3;
  int max_features = 12;
  int max_rows = 32;
  int max_domain = 3;
  int max_depth = 4;
  // Targets are delta = q * v([n]) for each q.
  std::vector<Rational> delta_fractions = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  bool contrastive = true;
  bool sufficient = true;
  bool timings = false;
  int jobs = 1;
};

struct BenchRow {
  int instance = 0;
  std::string kind;
  int n = 0;
  int n_reduced = 0;
  int rows = 0;
  Rational delta;
  int greedy_size = 0;
  int oracle_size = 0;
  double ratio = 1.0;
  // Absent when the instance is degenerate or a bound term is undefined.
  std::optional<double> ln_bound;
  std::optional<Rational> curvature;
  std::optional<double> bound;
  std::optional<Rational> min_singleton;
  bool degenerate = false;
  std::optional<double> wall_ms;

  bool within_bound() const { return degenerate || (bound && ratio <= *bound); }
};

// Seeded random tree models over product-grid datasets, preprocessed, with
// cardinal_greedy compared against the exhaustive optimum.
std::vector<BenchRow> RunBench(const BenchConfig& config);

std::string BenchCsv(const std::vector<BenchRow>& rows, bool timings);

}  // namespace probex

#endif  // PROBEX_BENCH_H_
