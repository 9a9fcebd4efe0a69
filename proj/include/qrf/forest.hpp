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

#pragma once

// Trained regression forests and their exact classical evaluation.
//
// Trees are stored heap-indexed: the root is node 1, the children of node j
// are 2j (predicate false) and 2j + 1 (predicate true). Every tree is padded
// to its full height h, so internal nodes occupy [1, 2^h - 1] and leaves
// occupy [2^h, 2^(h+1) - 1]. A walk from the root therefore always takes
// exactly h steps.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qrf/rng.hpp"

namespace qrf {

enum class AttributeKind { Real, Discrete };

struct AttributeSpec {
    AttributeKind kind = AttributeKind::Real;
    std::vector<double> categories;  // Discrete only, the allowed values W_j.

    static AttributeSpec real() { return {AttributeKind::Real, {}}; }
    static AttributeSpec discrete(std::vector<double> categories) {
        return {AttributeKind::Discrete, std::move(categories)};
    }
    static AttributeSpec binary() { return discrete({0.0, 1.0}); }

    bool operator==(const AttributeSpec&) const = default;
};

using Schema = std::vector<AttributeSpec>;

/// Attribute values X = (x_1, ..., x_d).
struct InputObject {
    std::vector<double> values;

    /// Throws InvalidInput if `values` does not fit `schema`.
    void validate(const Schema& schema) const;

    bool operator==(const InputObject&) const = default;
};

enum class PredicateKind { Greater, Equals };

/// `x_attr > threshold` or `x_attr == threshold`. `attribute` is 1-based.
struct Predicate {
    PredicateKind kind = PredicateKind::Greater;
    int attribute = 1;
    double threshold = 0.0;

    bool evaluate(const InputObject& x) const;

    bool operator==(const Predicate&) const = default;
};

class DecisionTree {
  public:
    /// Full tree: `nodes[k]` is the predicate of heap index k + 1 and
    /// `leaves[k]` the label of heap index 2^h + k.
    DecisionTree(int height, std::vector<Predicate> nodes, std::vector<double> leaves);

    /// Builds a tree from a possibly ragged heap-indexed description and pads
    /// every branch shorter than `height` by pushing its leaf label down a
    /// pass-through chain. Both children of a padding node carry the same
    /// label, so its predicate never changes the result.
    static DecisionTree padded(int height, const std::map<int, Predicate>& nodes,
                               const std::map<int, double>& leaves);

    int height() const noexcept { return height_; }
    std::int64_t first_leaf() const noexcept { return std::int64_t{1} << height_; }
    std::int64_t end_index() const noexcept { return std::int64_t{2} << height_; }

    const Predicate& node(std::int64_t index) const;
    double leaf(std::int64_t index) const;
    bool is_leaf(std::int64_t index) const noexcept {
        return index >= first_leaf() && index < end_index();
    }

    std::span<const Predicate> nodes() const noexcept { return nodes_; }
    std::span<const double> leaves() const noexcept { return leaves_; }

    bool operator==(const DecisionTree&) const = default;

  private:
    int height_;
    std::vector<Predicate> nodes_;
    std::vector<double> leaves_;
};

class RandomForest {
  public:
    /// Throws InvalidInput on an empty forest, mixed heights or predicates
    /// that reference attributes outside `schema`.
    RandomForest(std::vector<DecisionTree> trees, Schema schema);

    std::size_t size() const noexcept { return trees_.size(); }
    int height() const noexcept { return trees_.front().height(); }
    const std::vector<DecisionTree>& trees() const noexcept { return trees_; }
    const DecisionTree& tree(std::size_t i) const { return trees_.at(i); }
    const Schema& schema() const noexcept { return schema_; }

    /// Minimum and maximum leaf label over all trees.
    double y_min() const noexcept { return y_min_; }
    double y_max() const noexcept { return y_max_; }

    bool operator==(const RandomForest&) const = default;

  private:
    std::vector<DecisionTree> trees_;
    Schema schema_;
    double y_min_;
    double y_max_;
};

struct LeafHit {
    std::int64_t index;
    double value;
};

/// Walks from the root by evaluating predicates. Throws InvalidInput if the
/// tree references an attribute that `x` lacks.
LeafHit walk_tree(const DecisionTree& tree, const InputObject& x);

/// Mean of the per-tree leaf labels. Validates `x` against the schema.
double forecast_classical(const RandomForest& forest, const InputObject& x);

/// Mean of (y_i - y_min) / (y_max - y_min). Throws DegenerateRange when
/// every leaf in the forest has the same label.
double beta_classical(const RandomForest& forest, const InputObject& x);

/// beta * (y_max - y_min) + y_min.
double beta_to_R(double beta, double y_min, double y_max);

struct ForestShape {
    int trees = 2;
    int height = 2;
    Schema schema = {AttributeSpec::binary(), AttributeSpec::binary(), AttributeSpec::binary()};
    double label_min = 0.0;
    double label_max = 10.0;
};

/// Random full trees. Real attributes get `x > u` tests with u in [0, 1),
/// discrete ones `x == c` for a random category c. Labels are uniform in
/// [label_min, label_max] rounded to four decimals.
RandomForest generate_random_forest(const ForestShape& shape, std::uint64_t seed);

/// Uniform over each discrete attribute's categories; [0, 1) for real ones.
InputObject random_input(const Schema& schema, Rng& rng);

}  // namespace qrf
