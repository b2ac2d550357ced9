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

#ifndef PROBEX_IO_H_
#define PROBEX_IO_H_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "probex/audit.h"
#include "probex/distribution.h"
#include "probex/explain.h"
#include "probex/model.h"

namespace probex {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Throws kLoadError naming `source` on malformed text.
Json ParseJsonText(const std::string& text, const std::string& source);

// All loaders throw kLoadError with "<source>: <location>: <reason>".
Model ParseModel(const Json& doc, const std::string& source = "<model>");
std::shared_ptr<const Model> LoadModel(const std::filesystem::path& path);
Json ModelToJson(const Model& model);

// Relative dataset paths resolve against `base_dir`.
Distribution ParseDistribution(const Json& doc, const Domains& domains, const std::filesystem::path& base_dir,
                               const std::string& source = "<distribution>");
std::shared_ptr<const Distribution> LoadDistribution(const std::filesystem::path& path, const Domains& domains);
Json DistributionToJson(const ProductDistribution& dist);

EmpiricalDistribution ParseDataset(const std::string& csv, const Domains& domains,
                                   const std::string& source = "<dataset>");
EmpiricalDistribution LoadDataset(const std::filesystem::path& path, const Domains& domains);
std::string DatasetToCsv(const EmpiricalDistribution& dataset);

// "1,0,1" or "[1,0,1]".
FeatureVector ParseInstance(const std::string& text);

Json FeatureSetToJson(FeatureSet s);
Json ResultToJson(const ExplanationResult& result);
Json ReportToJson(const AuditReport& report);
Json CurvatureToJson(const Curvature& curvature);

// Bounds and other real outputs use 12 significant digits.
std::string FormatReal(double value);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace probex

#endif  // PROBEX_IO_H_
