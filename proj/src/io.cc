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

#include "probex/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "probex/errors.h"

namespace probex {

namespace {

[[noreturn]] void Fail(const std::string& source, const std::string& where, const std::string& why) {
  throw Error(ErrorCode::kLoadError, source + ": " + (where.empty() ? "/" : where) + ": " + why);
}

// Cursor into a JSON document that remembers its location for error messages.
class Node {
 public:
  Node(const Json& json, const std::string& source, std::string where = "")
      : json_(json), source_(source), where_(std::move(where)) {}

  const Json& json() const { return json_; }
  const std::string& where() const { return where_; }
  [[noreturn]] void Fail(const std::string& why) const { probex::Fail(source_, where_, why); }

  bool has(const std::string& key) const { return json_.is_object() && json_.contains(key); }
  Node operator[](const std::string& key) const {
    if (!json_.is_object()) Fail("expected an object");
    if (!json_.contains(key)) Fail("missing key \"" + key + "\"");
    return Node(json_.at(key), source_, where_ + "/" + key);
  }
  Node operator[](std::size_t i) const { return Node(json_.at(i), source_, where_ + "/" + std::to_string(i)); }

  std::size_t ArraySize() const {
    if (!json_.is_array()) Fail("expected an array");
    return json_.size();
  }
  int Int() const {
    if (!json_.is_number_integer()) Fail("expected an integer");
    return json_.get<int>();
  }
  std::string String() const {
    if (!json_.is_string()) Fail("expected a string");
    return json_.get<std::string>();
  }
  Rational Rat() const {
    if (json_.is_number_integer()) return Rational(json_.get<long long>());
    try {
      return ParseRational(String());
    } catch (const Error& e) {
      Fail(e.what());
    }
  }
  std::vector<int> Ints() const {
    std::vector<int> out;
    for (std::size_t i = 0, n = ArraySize(); i < n; ++i) out.push_back((*this)[i].Int());
    return out;
  }

 private:
  const Json& json_;
  const std::string& source_;
  std::string where_;
};

void CheckVersion(const Node& root) {
  if (root.has("format_version") && root["format_version"].Int() != kFormatVersion) {
    root["format_version"].Fail("unsupported format_version");
  }
}

// Appends `tree` in pre-order so children always receive larger indices.
int FlattenTree(const Node& tree, const Domains& domains, std::vector<DecisionTree::Node>& out) {
  const int index = static_cast<int>(out.size());
  out.emplace_back();
  if (tree.has("leaf")) {
    out[index].label = tree["leaf"].Int();
    return index;
  }
  const int feature = tree["feature"].Int();
  if (feature < 0 || feature >= domains.num_features()) tree["feature"].Fail("feature index out of range");
  const Node children = tree["children"];
  if (!children.json().is_object()) children.Fail("expected an object keyed by feature value");
  std::vector<int> child_index(domains.size(feature), -1);
  for (const auto& [key, value] : children.json().items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      children.Fail("child key \"" + key + "\" is not an integer");
    }
    const int k = domains.IndexOf(feature, v);
    if (k < 0) children.Fail("value " + key + " is outside the domain of feature " + std::to_string(feature));
    child_index[k] = FlattenTree(children[key], domains, out);
  }
  for (int k = 0; k < domains.size(feature); ++k) {
    if (child_index[k] < 0) {
      children.Fail("no child for value " + std::to_string(domains.values(feature)[k]));
    }
  }
  out[index].feature = feature;
  out[index].children = std::move(child_index);
  return index;
}

DecisionTree ParseTree(const Node& tree, const Domains& domains) {
  std::vector<DecisionTree::Node> nodes;
  FlattenTree(tree, domains, nodes);
  try {
    return DecisionTree(std::move(nodes), domains);
  } catch (const Error& e) {
    tree.Fail(e.what());
  }
}

Json TreeToJson(const DecisionTree& tree, const Domains& domains, int index = 0) {
  const DecisionTree::Node& node = tree.nodes()[index];
  if (node.is_leaf()) return Json{{"leaf", node.label}};
  Json children = Json::object();
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    children[std::to_string(domains.values(node.feature)[k])] = TreeToJson(tree, domains, node.children[k]);
  }
  return Json{{"feature", node.feature}, {"children", children}};
}

ReluMlp ParseMlp(const Node& root, int n) {
  const Node weights = root["weights"];
  const Node biases = root["biases"];
  if (weights.ArraySize() != biases.ArraySize()) root.Fail("\"weights\" and \"biases\" differ in layer count");
  std::vector<ReluMlp::Layer> layers;
  for (std::size_t j = 0; j < weights.ArraySize(); ++j) {
    const Node w = weights[j];
    const Node b = biases[j];
    const std::size_t rows = w.ArraySize();
    const std::size_t cols = rows == 0 ? 0 : w[0].ArraySize();
    ReluMlp::Layer layer;
    layer.weights.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      if (w[r].ArraySize() != cols) w[r].Fail("ragged weight matrix");
      for (std::size_t c = 0; c < cols; ++c) layer.weights(r, c) = w[r][c].Rat();
    }
    layer.bias.resize(static_cast<Eigen::Index>(b.ArraySize()));
    for (std::size_t c = 0; c < b.ArraySize(); ++c) layer.bias(c) = b[c].Rat();
    layers.push_back(std::move(layer));
  }
  try {
    return ReluMlp(std::move(layers), n);
  } catch (const Error& e) {
    root.Fail(e.what());
  }
}

Json RationalsToJson(const auto& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(ToString(v));
  return out;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string Trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kLoadError, path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(source, "", std::string("malformed JSON: ") + e.what());
  }
}

Model ParseModel(const Json& doc, const std::string& source) {
  const Node root(doc, source);
  CheckVersion(root);
  const std::string type = root["type"].String();
  const int n = root["n_features"].Int();
  if (n < 0 || n > kMaxFeatures) root["n_features"].Fail("must lie in [0, 64]");
  Domains domains;
  if (root.has("domains")) {
    const Node d = root["domains"];
    if (d.ArraySize() != static_cast<std::size_t>(n)) d.Fail("expected one domain per feature");
    std::vector<std::vector<int>> values;
    for (std::size_t f = 0; f < d.ArraySize(); ++f) values.push_back(d[f].Ints());
    try {
      domains = Domains(std::move(values));
    } catch (const Error& e) {
      d.Fail(e.what());
    }
  } else {
    domains = Domains::Binary(n);
  }
  const int num_classes = root.has("n_classes") ? root["n_classes"].Int() : 0;

  auto build = [&](ModelBody body) {
    try {
      return Model(domains, std::move(body), num_classes);
    } catch (const Error& e) {
      root.Fail(e.what());
    }
  };

  if (type == "decision_tree") return build(ParseTree(root["tree"], domains));
  if (type == "ensemble") {
    const std::string voting_name = root["voting"].String();
    Voting voting;
    if (voting_name == "majority") {
      voting = Voting::kMajority;
    } else if (voting_name == "weighted") {
      voting = Voting::kWeighted;
    } else {
      root["voting"].Fail("expected \"majority\" or \"weighted\"");
    }
    const Node trees = root["trees"];
    std::vector<DecisionTree> parsed;
    for (std::size_t t = 0; t < trees.ArraySize(); ++t) parsed.push_back(ParseTree(trees[t], domains));
    std::vector<Rational> weights;
    if (root.has("weights")) {
      const Node w = root["weights"];
      for (std::size_t t = 0; t < w.ArraySize(); ++t) weights.push_back(w[t].Rat());
    }
    try {
      return build(TreeEnsemble(std::move(parsed), voting, std::move(weights)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kLoadError) throw;
      root.Fail(e.what());
    }
  }
  if (type == "mlp") return build(ParseMlp(root, n));
  if (type == "odnf") {
    const Node terms = root["terms"];
    std::vector<OrthogonalDnf::Term> parsed;
    for (std::size_t t = 0; t < terms.ArraySize(); ++t) {
      OrthogonalDnf::Term term;
      for (std::size_t l = 0; l < terms[t].ArraySize(); ++l) {
        const Node literal = terms[t][l];
        if (literal.ArraySize() != 2) literal.Fail("literal must be [feature, value]");
        term.emplace_back(literal[0].Int(), literal[1].Int());
      }
      parsed.push_back(std::move(term));
    }
    try {
      return build(OrthogonalDnf(std::move(parsed), n));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kLoadError) throw;
      terms.Fail(e.what());
    }
  }
  if (type == "truth_table") {
    try {
      return build(TruthTable(root["outputs"].Ints(), domains));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kLoadError) throw;
      root["outputs"].Fail(e.what());
    }
  }
  root["type"].Fail("unknown model type \"" + type + "\"");
}

std::shared_ptr<const Model> LoadModel(const std::filesystem::path& path) {
  const std::string source = path.string();
  return std::make_shared<const Model>(ParseModel(ParseJsonText(ReadFile(path), source), source));
}

Json ModelToJson(const Model& model) {
  const Domains& domains = model.domains();
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["type"] = model.TypeName();
  doc["n_features"] = domains.num_features();
  Json d = Json::array();
  for (int f = 0; f < domains.num_features(); ++f) d.push_back(domains.values(f));
  doc["domains"] = d;
  doc["n_classes"] = model.num_classes();
  if (const auto* tree = model.get_if<DecisionTree>()) {
    doc["tree"] = TreeToJson(*tree, domains);
  } else if (const auto* ensemble = model.get_if<TreeEnsemble>()) {
    doc["voting"] = ensemble->voting() == Voting::kMajority ? "majority" : "weighted";
    doc["weights"] = RationalsToJson(ensemble->weights());
    Json trees = Json::array();
    for (const auto& t : ensemble->trees()) trees.push_back(TreeToJson(t, domains));
    doc["trees"] = trees;
  } else if (const auto* mlp = model.get_if<ReluMlp>()) {
    Json weights = Json::array();
    Json biases = Json::array();
    for (const auto& layer : mlp->layers()) {
      Json w = Json::array();
      for (Eigen::Index r = 0; r < layer.weights.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < layer.weights.cols(); ++c) row.push_back(ToString(layer.weights(r, c)));
        w.push_back(row);
      }
      weights.push_back(w);
      Json b = Json::array();
      for (Eigen::Index c = 0; c < layer.bias.size(); ++c) b.push_back(ToString(layer.bias(c)));
      biases.push_back(b);
    }
    doc["weights"] = weights;
    doc["biases"] = biases;
  } else if (const auto* dnf = model.get_if<OrthogonalDnf>()) {
    Json terms = Json::array();
    for (const auto& term : dnf->terms()) {
      Json t = Json::array();
      for (const auto& [f, v] : term) t.push_back({f, v});
      terms.push_back(t);
    }
    doc["terms"] = terms;
  } else if (const auto* table = model.get_if<TruthTable>()) {
    doc["outputs"] = table->outputs();
  }
  return doc;
}

Distribution ParseDistribution(const Json& doc, const Domains& domains, const std::filesystem::path& base_dir,
                               const std::string& source) {
  const Node root(doc, source);
  CheckVersion(root);
  const std::string type = root["type"].String();
  if (type == "uniform") return ProductDistribution::Uniform(domains);
  if (type == "product") {
    const Node marginals = root["marginals"];
    if (marginals.ArraySize() != static_cast<std::size_t>(domains.num_features())) {
      marginals.Fail("expected one marginal per feature");
    }
    std::vector<std::vector<Rational>> masses(domains.num_features());
    for (int f = 0; f < domains.num_features(); ++f) {
      const Node m = marginals[f];
      if (!m.json().is_object()) m.Fail("expected an object keyed by feature value");
      masses[f].assign(domains.size(f), Rational(0));
      for (const auto& [key, value] : m.json().items()) {
        int v = 0;
        try {
          v = std::stoi(key);
        } catch (const std::exception&) {
          m.Fail("key \"" + key + "\" is not an integer");
        }
        const int k = domains.IndexOf(f, v);
        if (k < 0) m.Fail("value " + key + " is outside the domain of feature " + std::to_string(f));
        masses[f][k] = m[key].Rat();
      }
    }
    try {
      return ProductDistribution(domains, std::move(masses));
    } catch (const Error& e) {
      marginals.Fail(e.what());
    }
  }
  if (type == "empirical") {
    std::filesystem::path dataset = root["dataset"].String();
    if (dataset.is_relative()) dataset = base_dir / dataset;
    return LoadDataset(dataset, domains);
  }
  root["type"].Fail("unknown distribution type \"" + type + "\"");
}

std::shared_ptr<const Distribution> LoadDistribution(const std::filesystem::path& path, const Domains& domains) {
  const std::string source = path.string();
  const Json doc = ParseJsonText(ReadFile(path), source);
  return std::make_shared<const Distribution>(ParseDistribution(doc, domains, path.parent_path(), source));
}

Json DistributionToJson(const ProductDistribution& dist) {
  Json marginals = Json::array();
  for (int f = 0; f < dist.num_features(); ++f) {
    Json m = Json::object();
    for (int k = 0; k < dist.domains().size(f); ++k) {
      m[std::to_string(dist.domains().values(f)[k])] = ToString(dist.marginal(f)[k]);
    }
    marginals.push_back(m);
  }
  return Json{{"format_version", kFormatVersion}, {"type", "product"}, {"marginals", marginals}};
}

EmpiricalDistribution ParseDataset(const std::string& csv, const Domains& domains, const std::string& source) {
  std::istringstream in(csv);
  std::string line;
  int line_no = 0;
  const int n = domains.num_features();
  auto where = [&] { return "line " + std::to_string(line_no); };
  bool header_seen = false;
  std::vector<FeatureVector> rows;
  while (std::getline(in, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string> cells = SplitCsvLine(line);
    if (!header_seen) {
      header_seen = true;
      if (static_cast<int>(cells.size()) != n) Fail(source, where(), "header must name " + std::to_string(n) + " columns");
      for (int f = 0; f < n; ++f) {
        if (Trim(cells[f]) != "f" + std::to_string(f)) Fail(source, where(), "header column " + std::to_string(f) + " must be f" + std::to_string(f));
      }
      continue;
    }
    const int row_index = static_cast<int>(rows.size());
    if (static_cast<int>(cells.size()) != n) {
      Fail(source, where(), "row " + std::to_string(row_index) + " has " + std::to_string(cells.size()) + " cells");
    }
    FeatureVector row(n);
    for (int f = 0; f < n; ++f) {
      const std::string cell = Trim(cells[f]);
      try {
        std::size_t used = 0;
        row[f] = std::stoi(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        Fail(source, where(), "row " + std::to_string(row_index) + " column " + std::to_string(f) + ": \"" + cell + "\" is not an integer");
      }
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) Fail(source, "line 1", "missing header");
  try {
    return EmpiricalDistribution(std::move(rows), domains);
  } catch (const Error& e) {
    Fail(source, "", e.what());
  }
}

EmpiricalDistribution LoadDataset(const std::filesystem::path& path, const Domains& domains) {
  return ParseDataset(ReadFile(path), domains, path.string());
}

std::string DatasetToCsv(const EmpiricalDistribution& dataset) {
  std::string out;
  for (int f = 0; f < dataset.num_features(); ++f) out += (f ? ",f" : "f") + std::to_string(f);
  out += '\n';
  for (const auto& row : dataset.rows()) {
    for (std::size_t f = 0; f < row.size(); ++f) out += (f ? "," : "") + std::to_string(row[f]);
    out += '\n';
  }
  return out;
}

FeatureVector ParseInstance(const std::string& text) {
  std::string body = Trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(ErrorCode::kInvalidInput, "unbalanced brackets in instance");
    body = body.substr(1, body.size() - 2);
  }
  FeatureVector x;
  if (Trim(body).empty()) return x;
  for (const std::string& cell : SplitCsvLine(body)) {
    const std::string c = Trim(cell);
    try {
      std::size_t used = 0;
      x.push_back(std::stoi(c, &used));
      if (used != c.size()) throw std::invalid_argument(c);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput, "instance entry \"" + c + "\" is not an integer");
    }
  }
  return x;
}

std::string FormatReal(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

Json FeatureSetToJson(FeatureSet s) { return s.indices(); }

Json ResultToJson(const ExplanationResult& result) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["subset"] = FeatureSetToJson(result.subset);
  doc["value"] = ToString(result.value);
  doc["delta"] = ToString(result.delta);
  doc["objective"] = ObjectiveName(result.objective);
  doc["certified"] = result.certified;
  if (result.bound) doc["bound"] = FormatReal(*result.bound);
  return doc;
}

Json ReportToJson(const AuditReport& report) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["property"] = PropertyName(report.property);
  if (report.mode.exhaustive) {
    doc["mode"] = "exhaustive";
  } else {
    doc["mode"] = Json{{"sampled", {{"count", report.mode.samples}, {"seed", report.mode.seed}}}};
  }
  doc["n_features"] = report.num_features;
  doc["holds"] = report.holds;
  doc["tuples"] = report.tuples;
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    witnesses.push_back(Json{{"S", FeatureSetToJson(w.s)},
                             {"S_prime", FeatureSetToJson(w.s_prime)},
                             {"i", w.i},
                             {"values", RationalsToJson(w.values)}});
  }
  doc["witnesses"] = witnesses;
  return doc;
}

Json CurvatureToJson(const Curvature& curvature) {
  return Json{{"format_version", kFormatVersion},
              {"curvature", ToString(curvature.value)},
              {"ratios", RationalsToJson(curvature.ratios)}};
}

}  // namespace probex
