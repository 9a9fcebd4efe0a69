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

#include "qrf/forest.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "qrf/errors.hpp"

namespace qrf {

namespace {

int depth_of(std::int64_t index) {
    return std::bit_width(static_cast<std::uint64_t>(index)) - 1;
}

const Predicate kPassThrough{PredicateKind::Greater, 1, 0.0};

}  // namespace

void InputObject::validate(const Schema& schema) const {
    if (values.size() != schema.size()) {
        throw InvalidInput("input has " + std::to_string(values.size()) +
                           " attributes, schema declares " + std::to_string(schema.size()));
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double v = values[j];
        if (!std::isfinite(v)) {
            throw InvalidInput("attribute " + std::to_string(j + 1) + " is not finite");
        }
        const auto& spec = schema[j];
        if (spec.kind == AttributeKind::Discrete &&
            std::find(spec.categories.begin(), spec.categories.end(), v) == spec.categories.end()) {
            throw InvalidInput("attribute " + std::to_string(j + 1) + " value " + std::to_string(v) +
                               " is not a declared category");
        }
    }
}

bool Predicate::evaluate(const InputObject& x) const {
    if (attribute < 1 || static_cast<std::size_t>(attribute) > x.values.size()) {
        throw InvalidInput("predicate references attribute " + std::to_string(attribute) +
                           " but the input has " + std::to_string(x.values.size()));
    }
    const double v = x.values[static_cast<std::size_t>(attribute - 1)];
    return kind == PredicateKind::Greater ? v > threshold : v == threshold;
}

DecisionTree::DecisionTree(int height, std::vector<Predicate> nodes, std::vector<double> leaves)
    : height_(height), nodes_(std::move(nodes)), leaves_(std::move(leaves)) {
    if (height_ < 1 || height_ > 30) {
        throw InvalidInput("tree height must be in [1, 30], got " + std::to_string(height_));
    }
    const auto internal = static_cast<std::size_t>(first_leaf() - 1);
    const auto leaf_count = static_cast<std::size_t>(first_leaf());
    if (nodes_.size() != internal) {
        throw InvalidInput("tree of height " + std::to_string(height_) + " needs " +
                           std::to_string(internal) + " internal nodes, got " +
                           std::to_string(nodes_.size()));
    }
    if (leaves_.size() != leaf_count) {
        throw InvalidInput("tree of height " + std::to_string(height_) + " needs " +
                           std::to_string(leaf_count) + " leaves, got " +
                           std::to_string(leaves_.size()));
    }
    for (std::size_t k = 0; k < leaves_.size(); ++k) {
        if (!std::isfinite(leaves_[k])) {
            throw InvalidInput("leaf " + std::to_string(first_leaf() + static_cast<std::int64_t>(k)) +
                               " label is not finite");
        }
    }
}

DecisionTree DecisionTree::padded(int height, const std::map<int, Predicate>& nodes,
                                  const std::map<int, double>& leaves) {
    if (height < 1 || height > 30) {
        throw InvalidInput("tree height must be in [1, 30], got " + std::to_string(height));
    }
    for (const auto& [index, label] : leaves) {
        if (nodes.contains(index)) {
            throw InvalidInput("index " + std::to_string(index) + " is both a node and a leaf");
        }
    }

    const std::int64_t first_leaf = std::int64_t{1} << height;
    std::vector<Predicate> full_nodes(static_cast<std::size_t>(first_leaf - 1));
    std::vector<double> full_leaves(static_cast<std::size_t>(first_leaf));
    std::set<int> visited;

    // Depth-first over the described tree; a leaf above depth h is copied to
    // every full-depth descendant.
    std::vector<std::int64_t> stack{1};
    while (!stack.empty()) {
        const std::int64_t j = stack.back();
        stack.pop_back();
        if (j >= first_leaf && !leaves.contains(static_cast<int>(j))) {
            throw InvalidInput("index " + std::to_string(j) + " lies below height " +
                               std::to_string(height));
        }
        if (auto node = nodes.find(static_cast<int>(j)); node != nodes.end()) {
            visited.insert(static_cast<int>(j));
            full_nodes[static_cast<std::size_t>(j - 1)] = node->second;
            stack.push_back(2 * j + 1);
            stack.push_back(2 * j);
            continue;
        }
        auto leaf = leaves.find(static_cast<int>(j));
        if (leaf == leaves.end()) {
            throw InvalidInput("missing node or leaf at index " + std::to_string(j));
        }
        visited.insert(static_cast<int>(j));
        const int depth = depth_of(j);
        for (int level = depth; level < height; ++level) {
            const std::int64_t lo = j << (level - depth);
            for (std::int64_t k = lo; k < lo + (std::int64_t{1} << (level - depth)); ++k) {
                full_nodes[static_cast<std::size_t>(k - 1)] = kPassThrough;
            }
        }
        const std::int64_t lo = j << (height - depth);
        const std::int64_t hi = lo + (std::int64_t{1} << (height - depth));
        for (std::int64_t k = lo; k < hi; ++k) {
            full_leaves[static_cast<std::size_t>(k - first_leaf)] = leaf->second;
        }
    }

    for (const auto& [index, p] : nodes) {
        if (!visited.contains(index)) {
            throw InvalidInput("node index " + std::to_string(index) + " is unreachable from the root");
        }
    }
    for (const auto& [index, label] : leaves) {
        if (!visited.contains(index)) {
            throw InvalidInput("leaf index " + std::to_string(index) + " is unreachable from the root");
        }
    }
    return DecisionTree(height, std::move(full_nodes), std::move(full_leaves));
}

const Predicate& DecisionTree::node(std::int64_t index) const {
    if (index < 1 || index >= first_leaf()) {
        throw InvalidInput("internal node index " + std::to_string(index) + " out of range");
    }
    return nodes_[static_cast<std::size_t>(index - 1)];
}

double DecisionTree::leaf(std::int64_t index) const {
    if (!is_leaf(index)) {
        throw InvalidInput("leaf index " + std::to_string(index) + " out of range");
    }
    return leaves_[static_cast<std::size_t>(index - first_leaf())];
}

RandomForest::RandomForest(std::vector<DecisionTree> trees, Schema schema)
    : trees_(std::move(trees)), schema_(std::move(schema)) {
    if (trees_.empty()) {
        throw InvalidInput("a forest needs at least one tree");
    }
    for (std::size_t j = 0; j < schema_.size(); ++j) {
        const auto& spec = schema_[j];
        if (spec.kind == AttributeKind::Discrete && spec.categories.empty()) {
            throw InvalidInput("discrete attribute " + std::to_string(j + 1) + " has no categories");
        }
        if (spec.kind == AttributeKind::Real && !spec.categories.empty()) {
            throw InvalidInput("real attribute " + std::to_string(j + 1) + " lists categories");
        }
    }
    const int h = trees_.front().height();
    y_min_ = trees_.front().leaves().front();
    y_max_ = y_min_;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        const auto& tree = trees_[i];
        if (tree.height() != h) {
            throw InvalidInput("tree " + std::to_string(i) + " has height " +
                               std::to_string(tree.height()) + ", expected " + std::to_string(h));
        }
        for (const auto& p : tree.nodes()) {
            if (p.attribute < 1 || static_cast<std::size_t>(p.attribute) > schema_.size()) {
                throw InvalidInput("tree " + std::to_string(i) + " references attribute " +
                                   std::to_string(p.attribute) + " outside the schema");
            }
        }
        const auto [lo, hi] = std::minmax_element(tree.leaves().begin(), tree.leaves().end());
        y_min_ = std::min(y_min_, *lo);
        y_max_ = std::max(y_max_, *hi);
    }
}

LeafHit walk_tree(const DecisionTree& tree, const InputObject& x) {
    std::int64_t j = 1;
    for (int level = 0; level < tree.height(); ++level) {
        j = 2 * j + (tree.node(j).evaluate(x) ? 1 : 0);
    }
    return {j, tree.leaf(j)};
}

double forecast_classical(const RandomForest& forest, const InputObject& x) {
    x.validate(forest.schema());
    double sum = 0.0;
    for (const auto& tree : forest.trees()) {
        sum += walk_tree(tree, x).value;
    }
    return sum / static_cast<double>(forest.size());
}

double beta_classical(const RandomForest& forest, const InputObject& x) {
    x.validate(forest.schema());
    const double lo = forest.y_min();
    const double span = forest.y_max() - lo;
    if (!(span > 0.0)) {
        throw DegenerateRange("all leaf labels equal " + std::to_string(lo) +
                              "; the normalized mean is undefined");
    }
    double sum = 0.0;
    for (const auto& tree : forest.trees()) {
        sum += (walk_tree(tree, x).value - lo) / span;
    }
    return std::clamp(sum / static_cast<double>(forest.size()), 0.0, 1.0);
}

double beta_to_R(double beta, double y_min, double y_max) {
    if (!(y_max > y_min)) {
        throw DegenerateRange("y_max must exceed y_min to map beta back to R");
    }
    return beta * (y_max - y_min) + y_min;
}

RandomForest generate_random_forest(const ForestShape& shape, std::uint64_t seed) {
    if (shape.trees < 1) {
        throw InvalidInput("forest needs at least one tree");
    }
    if (shape.height < 1 || shape.height > 20) {
        throw InvalidInput("generated tree height must be in [1, 20]");
    }
    if (shape.schema.empty()) {
        throw InvalidInput("schema must declare at least one attribute");
    }
    if (!(shape.label_max > shape.label_min)) {
        throw InvalidInput("label range must satisfy label_min < label_max");
    }

    Rng rng(seed);
    const std::size_t internal = (std::size_t{1} << shape.height) - 1;
    std::vector<DecisionTree> trees;
    trees.reserve(static_cast<std::size_t>(shape.trees));
    for (int i = 0; i < shape.trees; ++i) {
        std::vector<Predicate> nodes(internal);
        for (auto& p : nodes) {
            const auto a = uniform_index(rng, shape.schema.size());
            const auto& spec = shape.schema[a];
            p.attribute = static_cast<int>(a) + 1;
            if (spec.kind == AttributeKind::Discrete) {
                p.kind = PredicateKind::Equals;
                p.threshold = spec.categories[uniform_index(rng, spec.categories.size())];
            } else {
                p.kind = PredicateKind::Greater;
                p.threshold = std::round(uniform01(rng) * 1e4) / 1e4;
            }
        }
        std::vector<double> leaves(internal + 1);
        for (auto& y : leaves) {
            const double raw = uniform_real(rng, shape.label_min, shape.label_max);
            y = std::clamp(std::round(raw * 1e4) / 1e4, shape.label_min, shape.label_max);
        }
        trees.emplace_back(shape.height, std::move(nodes), std::move(leaves));
    }
    return RandomForest(std::move(trees), shape.schema);
}

InputObject random_input(const Schema& schema, Rng& rng) {
    InputObject x;
    x.values.reserve(schema.size());
    for (const auto& spec : schema) {
        if (spec.kind == AttributeKind::Discrete) {
            x.values.push_back(spec.categories[uniform_index(rng, spec.categories.size())]);
        } else {
            x.values.push_back(uniform01(rng));
        }
    }
    return x;
}

}  // namespace qrf
