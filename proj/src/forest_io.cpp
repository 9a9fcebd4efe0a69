// Copyright 2026 The qrf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrf/forest_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qrf/errors.hpp"

namespace qrf {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void require_object(const json& j, const std::string& where, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
    if (!j.is_object()) {
        throw ParseError(where, "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) {
            throw ParseError(where, "unknown field '" + key + "'");
        }
    }
    for (const auto& key : required) {
        if (!j.contains(key)) {
            throw ParseError(where, "missing field '" + key + "'");
        }
    }
}

long long get_integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ParseError(where, "expected an integer");
    }
    return j.get<long long>();
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ParseError(where, "expected a number");
    }
    return j.get<double>();
}

int parse_index(const std::string& key, const std::string& where) {
    int value = 0;
    const auto* end = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(key.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 1 || key.front() == '0') {
        throw ParseError(where, "'" + key + "' is not a positive decimal index");
    }
    return value;
}

AttributeSpec parse_attribute(const json& j, const std::string& where) {
    require_object(j, where, {"kind", "categories"}, {"kind"});
    if (!j["kind"].is_string()) {
        throw ParseError(where + ".kind", "expected a string");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "real") {
        if (j.contains("categories")) {
            throw ParseError(where, "real attributes take no categories");
        }
        return AttributeSpec::real();
    }
    if (kind != "discrete") {
        throw ParseError(where + ".kind", "unknown attribute kind '" + kind + "'");
    }
    if (!j.contains("categories") || !j["categories"].is_array() || j["categories"].empty()) {
        throw ParseError(where + ".categories", "discrete attributes need a non-empty array");
    }
    std::vector<double> categories;
    for (std::size_t k = 0; k < j["categories"].size(); ++k) {
        categories.push_back(
            get_number(j["categories"][k], where + ".categories[" + std::to_string(k) + "]"));
    }
    return AttributeSpec::discrete(std::move(categories));
}

Predicate parse_predicate(const json& j, const std::string& where) {
    require_object(j, where, {"kind", "attr", "threshold"}, {"kind", "attr", "threshold"});
    Predicate p;
    if (!j["kind"].is_string()) {
        throw ParseError(where + ".kind", "expected a string");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "greater") {
        p.kind = PredicateKind::Greater;
    } else if (kind == "equals") {
        p.kind = PredicateKind::Equals;
    } else {
        throw ParseError(where + ".kind", "unknown predicate kind '" + kind + "'");
    }
    const auto attr = get_integer(j["attr"], where + ".attr");
    if (attr < 1 || attr > 1'000'000) {
        throw ParseError(where + ".attr", "attribute index must be positive");
    }
    p.attribute = static_cast<int>(attr);
    p.threshold = get_number(j["threshold"], where + ".threshold");
    return p;
}

DecisionTree parse_tree(const json& j, int height, const std::string& where) {
    require_object(j, where, {"nodes", "leaves"}, {"nodes", "leaves"});
    if (!j["nodes"].is_object()) {
        throw ParseError(where + ".nodes", "expected an object");
    }
    if (!j["leaves"].is_object()) {
        throw ParseError(where + ".leaves", "expected an object");
    }
    std::map<int, Predicate> nodes;
    for (const auto& [key, value] : j["nodes"].items()) {
        const auto at = where + ".nodes[\"" + key + "\"]";
        nodes.emplace(parse_index(key, at), parse_predicate(value, at));
    }
    std::map<int, double> leaves;
    for (const auto& [key, value] : j["leaves"].items()) {
        const auto at = where + ".leaves[\"" + key + "\"]";
        leaves.emplace(parse_index(key, at), get_number(value, at));
    }
    try {
        return DecisionTree::padded(height, nodes, leaves);
    } catch (const InvalidInput& e) {
        throw ParseError(where, e.what());
    }
}

std::string attribute_kind_name(AttributeKind kind) {
    return kind == AttributeKind::Real ? "real" : "discrete";
}

}  // namespace

RandomForest load_forest(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    require_object(doc, "$", {"n", "h", "schema", "trees"}, {"n", "h", "schema", "trees"});

    const auto n = get_integer(doc["n"], "$.n");
    const auto h = get_integer(doc["h"], "$.h");
    if (n < 1) {
        throw ParseError("$.n", "must be at least 1");
    }
    if (h < 1 || h > 30) {
        throw ParseError("$.h", "must be in [1, 30]");
    }
    if (!doc["schema"].is_array()) {
        throw ParseError("$.schema", "expected an array");
    }
    if (!doc["trees"].is_array()) {
        throw ParseError("$.trees", "expected an array");
    }
    if (doc["trees"].size() != static_cast<std::size_t>(n)) {
        throw ParseError("$.trees", "holds " + std::to_string(doc["trees"].size()) +
                                        " trees but n = " + std::to_string(n));
    }

    Schema schema;
    for (std::size_t k = 0; k < doc["schema"].size(); ++k) {
        schema.push_back(parse_attribute(doc["schema"][k], "$.schema[" + std::to_string(k) + "]"));
    }
    std::vector<DecisionTree> trees;
    for (std::size_t i = 0; i < doc["trees"].size(); ++i) {
        trees.push_back(
            parse_tree(doc["trees"][i], static_cast<int>(h), "$.trees[" + std::to_string(i) + "]"));
    }
    try {
        return RandomForest(std::move(trees), std::move(schema));
    } catch (const InvalidInput& e) {
        throw ParseError("$", e.what());
    }
}

std::string save_forest(const RandomForest& forest) {
    ordered_json doc;
    doc["n"] = forest.size();
    doc["h"] = forest.height();
    doc["schema"] = ordered_json::array();
    for (const auto& spec : forest.schema()) {
        ordered_json a;
        a["kind"] = attribute_kind_name(spec.kind);
        if (spec.kind == AttributeKind::Discrete) {
            a["categories"] = spec.categories;
        }
        doc["schema"].push_back(std::move(a));
    }
    doc["trees"] = ordered_json::array();
    for (const auto& tree : forest.trees()) {
        ordered_json t;
        t["nodes"] = ordered_json::object();
        t["leaves"] = ordered_json::object();
        for (std::int64_t j = 1; j < tree.first_leaf(); ++j) {
            const auto& p = tree.node(j);
            ordered_json node;
            node["kind"] = p.kind == PredicateKind::Greater ? "greater" : "equals";
            node["attr"] = p.attribute;
            node["threshold"] = p.threshold;
            t["nodes"][std::to_string(j)] = std::move(node);
        }
        for (std::int64_t j = tree.first_leaf(); j < tree.end_index(); ++j) {
            t["leaves"][std::to_string(j)] = tree.leaf(j);
        }
        doc["trees"].push_back(std::move(t));
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

RandomForest load_forest_file(const std::string& path) {
    return load_forest(read_text_file(path));
}

void save_forest_file(const RandomForest& forest, const std::string& path) {
    write_text_file(path, save_forest(forest));
}

InputObject parse_input_csv(std::string_view text) {
    InputObject x;
    std::size_t field = 0;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
            token.remove_prefix(1);
        }
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
            token.remove_suffix(1);
        }
        ++field;
        double value = 0.0;
        const auto* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (token.empty() || ec != std::errc{} || ptr != end) {
            throw ParseError("field " + std::to_string(field),
                             "'" + std::string(token) + "' is not a number");
        }
        x.values.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return x;
}

}  // namespace qrf
