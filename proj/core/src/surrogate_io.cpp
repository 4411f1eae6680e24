/*
 * Copyright 2026 The pddshap Authors.
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

#include "pddshap/surrogate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pddshap/errors.hpp"
#include "pddshap/version.hpp"

namespace pddshap {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "pddshap-surrogate";

json tree_to_json(const TreeRegressor& tree) {
  json nodes = json::array();
  for (const TreeNode& n : tree.nodes()) {
    nodes.push_back({{"feature", n.feature},
                     {"threshold", n.threshold},
                     {"left", n.left},
                     {"right", n.right},
                     {"leaf_value", n.leaf_value}});
  }
  return {{"nodes", std::move(nodes)}};
}

json lookup_to_json(const LookupRegressor& lookup) {
  const SampleMatrix& points = lookup.points();
  json rows = json::array();
  for (std::size_t i = 0; i < points.rows(); ++i) {
    const auto row = points.row(i);
    rows.push_back(json(std::vector<double>(row.begin(), row.end())));
  }
  return {{"points", std::move(rows)}, {"targets", lookup.targets()}};
}

// json::at with a section-qualified error message
const json& field(const json& node, const char* key, const std::string& section) {
  const auto it = node.find(key);
  if (it == node.end() || it->is_null()) {
    throw SerializationError("surrogate file: missing '" + std::string(key) +
                             "' in " + section);
  }
  return *it;
}

template <typename T>
T field_as(const json& node, const char* key, const std::string& section) {
  try {
    return field(node, key, section).get<T>();
  } catch (const json::exception& e) {
    throw SerializationError("surrogate file: bad '" + std::string(key) + "' in " +
                             section + ": " + e.what());
  }
}

std::unique_ptr<ComponentRegressor> regressor_from_json(const json& node,
                                                        const std::string& section) {
  const auto kind = field_as<std::string>(node, "kind", section);
  if (kind == "tree") {
    const json& tree = field(node, "tree", section);
    const json& nodes = field(tree, "nodes", section + ".tree");
    if (!nodes.is_array()) {
      throw SerializationError("surrogate file: '" + section +
                               ".tree.nodes' is not an array");
    }
    std::vector<TreeNode> parsed;
    parsed.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string node_section =
          section + ".tree.nodes[" + std::to_string(i) + "]";
      const json& jn = nodes[i];
      TreeNode tn;
      tn.feature = field_as<int>(jn, "feature", node_section);
      tn.threshold = field_as<double>(jn, "threshold", node_section);
      tn.left = field_as<int>(jn, "left", node_section);
      tn.right = field_as<int>(jn, "right", node_section);
      tn.leaf_value = field_as<double>(jn, "leaf_value", node_section);
      parsed.push_back(tn);
    }
    try {
      return TreeRegressor::from_nodes(std::move(parsed));
    } catch (const SerializationError& e) {
      throw SerializationError(std::string(e.what()) + " in " + section + ".tree");
    }
  }
  if (kind == "lookup") {
    const json& lookup = field(node, "lookup", section);
    const std::string lookup_section = section + ".lookup";
    const json& points = field(lookup, "points", lookup_section);
    if (!points.is_array()) {
      throw SerializationError("surrogate file: '" + lookup_section +
                               ".points' is not an array");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      try {
        rows.push_back(points[i].get<std::vector<double>>());
      } catch (const json::exception& e) {
        throw SerializationError("surrogate file: bad point in " + lookup_section +
                                 ".points[" + std::to_string(i) + "]: " + e.what());
      }
    }
    auto targets = field_as<std::vector<double>>(lookup, "targets", lookup_section);
    try {
      return LookupRegressor::from_data(SampleMatrix::from_rows(rows),
                                        std::move(targets));
    } catch (const DataError& e) {
      throw SerializationError(std::string(e.what()) + " in " + lookup_section);
    }
  }
  throw SerializationError("surrogate file: unknown regressor kind '" + kind +
                           "' in " + section);
}

}  // namespace

void save_surrogate(const PDDSurrogate& surrogate, std::ostream& out) {
  json components = json::array();
  for (const auto& [subset, regressor] : surrogate.components()) {
    json entry;
    entry["subset"] = subset.members();
    json reg;
    reg["kind"] = std::string(regressor->kind());
    if (const auto* tree = dynamic_cast<const TreeRegressor*>(regressor.get())) {
      reg["tree"] = tree_to_json(*tree);
    } else if (const auto* lookup =
                   dynamic_cast<const LookupRegressor*>(regressor.get())) {
      reg["lookup"] = lookup_to_json(*lookup);
    } else {
      throw SerializationError("cannot serialize regressor kind '" +
                               std::string(regressor->kind()) + "'");
    }
    entry["regressor"] = std::move(reg);
    components.push_back(std::move(entry));
  }

  std::ostringstream fingerprint;
  fingerprint << std::hex << surrogate.background_fingerprint();

  const json doc = {{"format", kFormatTag},
                    {"format_version", kSurrogateFormatVersion},
                    {"d", surrogate.dimension()},
                    {"k", surrogate.order()},
                    {"f_empty", surrogate.baseline()},
                    {"background_fingerprint", fingerprint.str()},
                    {"components", std::move(components)}};
  out << doc.dump(2) << "\n";
}

void save_surrogate(const PDDSurrogate& surrogate, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  save_surrogate(surrogate, out);
  out.flush();
  if (!out) throw DataError("failed writing '" + path + "'");
}

PDDSurrogate load_surrogate(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw SerializationError(std::string("surrogate file is corrupt: ") + e.what());
  }
  if (!doc.is_object()) {
    throw SerializationError("surrogate file: top-level document is not an object");
  }
  if (doc.contains("format") && doc["format"] != kFormatTag) {
    throw SerializationError("surrogate file: unexpected format tag '" +
                             doc["format"].dump() + "'");
  }
  const int version = field_as<int>(doc, "format_version", "the header");
  if (version != kSurrogateFormatVersion) {
    throw SerializationError("surrogate file: unsupported format_version " +
                             std::to_string(version) + " (this build reads version " +
                             std::to_string(kSurrogateFormatVersion) + ")");
  }

  const int d = field_as<int>(doc, "d", "the header");
  const int k = field_as<int>(doc, "k", "the header");
  const double f_empty = field_as<double>(doc, "f_empty", "the header");
  const auto fingerprint_hex =
      field_as<std::string>(doc, "background_fingerprint", "the header");
  std::uint64_t fingerprint = 0;
  try {
    fingerprint = std::stoull(fingerprint_hex, nullptr, 16);
  } catch (const std::exception&) {
    throw SerializationError("surrogate file: bad background_fingerprint '" +
                             fingerprint_hex + "'");
  }

  const json& components = field(doc, "components", "the header");
  if (!components.is_array()) {
    throw SerializationError("surrogate file: 'components' is not an array");
  }
  PDDSurrogate::ComponentMap parsed;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::string section = "components[" + std::to_string(i) + "]";
    const json& entry = components[i];
    const auto members = field_as<std::vector<int>>(entry, "subset", section);
    FeatureSubset subset;
    try {
      subset = FeatureSubset::of(members, d);
    } catch (const InvalidArgumentError& e) {
      throw SerializationError("surrogate file: bad subset in " + section + ": " +
                               e.what());
    }
    const json& reg = field(entry, "regressor", section);
    parsed[subset] = regressor_from_json(reg, section + ".regressor");
  }

  try {
    return {f_empty, d, k, fingerprint, std::move(parsed)};
  } catch (const InvalidArgumentError& e) {
    throw SerializationError(std::string("surrogate file: ") + e.what());
  }
}

PDDSurrogate load_surrogate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return load_surrogate(in);
}

}  // namespace pddshap
